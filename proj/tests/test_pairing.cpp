#include <doctest.h>

#include <algorithm>

#include "tlgjs/pairing.hpp"

using namespace tlgjs;

namespace {

// Independent crossing test used only as an oracle: chords interleave on the
// circle iff exactly one endpoint of one lies between the endpoints of the
// other in cyclic position order.
int circle_pos(int i, int bottom, int points) { return i < bottom ? i : bottom + (points - 1 - i); }

bool oracle_noncrossing(int bottom, int top, const std::vector<int>& match) {
  const int points = bottom + top;
  for (int a = 0; a < points; ++a) {
    for (int b = 0; b < points; ++b) {
      if (a >= match[a] || b >= match[b] || a == b) continue;
      int p1 = circle_pos(a, bottom, points), q1 = circle_pos(match[a], bottom, points);
      int p2 = circle_pos(b, bottom, points), q2 = circle_pos(match[b], bottom, points);
      if (p1 > q1) std::swap(p1, q1);
      if (p2 > q2) std::swap(p2, q2);
      const bool b_inside = (p1 < p2 && p2 < q1);
      const bool b2_inside = (p1 < q2 && q2 < q1);
      if (b_inside != b2_inside) return false;
    }
  }
  return true;
}

// Brute force: all perfect matchings, filtered by the oracle.
void all_matchings(std::vector<int>& match, int points, std::vector<std::vector<int>>& out) {
  int first = 0;
  while (first < points && match[first] != -1) ++first;
  if (first == points) {
    out.push_back(match);
    return;
  }
  for (int j = first + 1; j < points; ++j) {
    if (match[j] != -1) continue;
    match[first] = j;
    match[j] = first;
    all_matchings(match, points, out);
    match[first] = -1;
    match[j] = -1;
  }
}

std::vector<std::vector<int>> oracle_nc_matchings(int bottom, int top) {
  std::vector<int> match(bottom + top, -1);
  std::vector<std::vector<int>> all;
  all_matchings(match, bottom + top, all);
  std::vector<std::vector<int>> nc;
  for (auto& m : all)
    if (oracle_noncrossing(bottom, top, m)) nc.push_back(m);
  return nc;
}

PlanarPairing sample(const std::vector<PlanarPairing>& pool, std::uint64_t& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return pool[(state >> 33) % pool.size()];
}

}  // namespace

TEST_CASE("enumeration matches the brute-force oracle") {
  for (int bottom = 0; bottom <= 4; ++bottom) {
    for (int top = 0; top <= 4; ++top) {
      if ((bottom + top) % 2 != 0) continue;
      const auto enumerated = enumerate_nc_pairings(bottom, top);
      const auto expected = oracle_nc_matchings(bottom, top);
      CHECK(enumerated.size() == expected.size());
      for (const auto& m : expected) {
        CHECK(std::count(enumerated.begin(), enumerated.end(), PlanarPairing(bottom, top, m)) == 1);
      }
    }
  }
}

TEST_CASE("enumeration counts are Catalan numbers") {
  CHECK(enumerate_nc_pairings(0).size() == 1);  // the empty pairing
  CHECK(enumerate_nc_pairings(4).size() == 2);
  CHECK(enumerate_nc_pairings(8).size() == 14);
  for (int points = 0; points <= 16; points += 2) {
    CHECK(enumerate_nc_pairings(points).size() == catalan(points / 2));
  }
  CHECK_THROWS_WITH_AS(enumerate_nc_pairings(3), "odd boundary", std::invalid_argument);
}

TEST_CASE("enumeration order is lexicographic in the match table") {
  const auto four = enumerate_nc_pairings(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0] == PlanarPairing(4, 0, {1, 0, 3, 2}));  // {(1,2),(3,4)}
  CHECK(four[1] == PlanarPairing(4, 0, {3, 2, 1, 0}));  // {(1,4),(2,3)}
  CHECK(std::is_sorted(four.begin(), four.end()));
}

TEST_CASE("pairing validation") {
  CHECK_THROWS_AS(PlanarPairing(2, 0, {0, 1}), std::invalid_argument);     // fixed point
  CHECK_THROWS_AS(PlanarPairing(2, 0, {1}), std::invalid_argument);        // size
  CHECK_THROWS_AS(PlanarPairing(4, 0, {2, 3, 0, 1}), std::invalid_argument);  // crossing
  CHECK_NOTHROW(PlanarPairing(2, 2, {1, 0, 3, 2}));  // cap under cup
}

TEST_CASE("gluing identities") {
  SUBCASE("identity strands are neutral") {
    for (const auto& p : enumerate_nc_pairings(3, 3)) {
      const auto up = glue_vertical(PlanarPairing::identity(3), p);
      CHECK(up.pairing == p);
      CHECK(up.loops == 0);
      const auto down = glue_vertical(p, PlanarPairing::identity(3));
      CHECK(down.pairing == p);
      CHECK(down.loops == 0);
    }
  }
  SUBCASE("cap over cup closes one loop") {
    const auto g = glue_vertical(PlanarPairing::rainbow_cap(1), PlanarPairing::rainbow_cup(1));
    CHECK(g.pairing == PlanarPairing());
    CHECK(g.loops == 1);
  }
  SUBCASE("cup-over-cap squared reproduces itself with one loop") {
    const auto e = glue_vertical(PlanarPairing::rainbow_cup(1), PlanarPairing::rainbow_cap(1)).pairing;
    REQUIRE(e == PlanarPairing(2, 2, {1, 0, 3, 2}));
    const auto square = glue_vertical(e, e);
    CHECK(square.pairing == e);
    CHECK(square.loops == 1);
  }
  SUBCASE("nested caps over nested cups close n loops") {
    for (int n = 1; n <= 5; ++n) {
      const auto g = glue_vertical(PlanarPairing::rainbow_cap(n), PlanarPairing::rainbow_cup(n));
      CHECK(g.loops == n);
    }
  }
  SUBCASE("strand mismatch is rejected") {
    CHECK_THROWS_AS(glue_vertical(PlanarPairing::rainbow_cap(1), PlanarPairing::identity(3)), std::invalid_argument);
  }
}

TEST_CASE("gluing is associative on random stacks") {
  const auto pool22 = enumerate_nc_pairings(2, 2);
  const auto pool24 = enumerate_nc_pairings(2, 4);
  const auto pool42 = enumerate_nc_pairings(4, 2);
  std::uint64_t state = 99;
  for (int i = 0; i < 200; ++i) {
    const PlanarPairing a = sample(pool42, state);   // topmost, 4 interface strands below
    const PlanarPairing b = sample(pool24, state);   // middle, 2 below and 4 above
    const PlanarPairing c = sample(pool22, state);   // bottom
    // (a over b) over c vs a over (b over c); loop counts add along the way.
    const auto ab = glue_vertical(a, b);
    const auto left = glue_vertical(ab.pairing, c);
    const auto bc = glue_vertical(b, c);
    const auto right = glue_vertical(a, bc.pairing);
    CHECK(left.pairing == right.pairing);
    CHECK(ab.loops + left.loops == bc.loops + right.loops);
  }
}

TEST_CASE("juxtaposition is monoidal") {
  const PlanarPairing empty;
  const auto pool = enumerate_nc_pairings(2, 2);
  std::uint64_t state = 7;
  for (int i = 0; i < 50; ++i) {
    const PlanarPairing a = sample(pool, state), b = sample(pool, state), c = sample(pool, state);
    CHECK(juxtapose(empty, a) == a);
    CHECK(juxtapose(a, empty) == a);
    CHECK(juxtapose(juxtapose(a, b), c) == juxtapose(a, juxtapose(b, c)));
  }
  CHECK(juxtapose(PlanarPairing::identity(1), PlanarPairing::identity(1)) == PlanarPairing::identity(2));
  // Two cups side by side: {(1,2),(3,4)} on four top points.
  CHECK(juxtapose(PlanarPairing::rainbow_cup(1), PlanarPairing::rainbow_cup(1)) ==
        PlanarPairing(0, 4, {1, 0, 3, 2}));
}

TEST_CASE("mirror is an involution and anti-commutes with juxtaposition") {
  const auto pool = enumerate_nc_pairings(2, 4);
  std::uint64_t state = 23;
  for (int i = 0; i < 50; ++i) {
    const PlanarPairing a = sample(pool, state), b = sample(pool, state);
    CHECK(mirror(mirror(a)) == a);
    CHECK(mirror(juxtapose(a, b)) == juxtapose(mirror(b), mirror(a)));
  }
}

TEST_CASE("vertical flip is an involution") {
  for (const auto& p : enumerate_nc_pairings(2, 4)) {
    CHECK(flip_vertical(flip_vertical(p)) == p);
    CHECK(flip_vertical(p).bottom() == 4);
    CHECK(flip_vertical(p).top() == 2);
  }
}
