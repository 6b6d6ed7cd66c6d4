#include "tlgjs/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tlgjs {

namespace {

// Circle position of a boundary point: bottom points keep their index, top
// points are traversed in reversed order.
inline int circle_position(int i, int bottom, int points) {
  return i < bottom ? i : bottom + (points - 1 - i);
}

// Balanced-bracket test for chords listed in circle order. Crossing is a
// cyclic invariant, so checking one linearization suffices.
bool noncrossing(int bottom, int top, const std::vector<int>& match) {
  const int points = bottom + top;
  std::vector<int> chord_at(points);
  for (int i = 0; i < points; ++i) chord_at[circle_position(i, bottom, points)] = i;
  std::vector<int> stack;
  std::vector<bool> seen(points, false);
  for (int pos = 0; pos < points; ++pos) {
    const int i = chord_at[pos];
    if (!seen[i]) {
      seen[i] = seen[match[i]] = true;
      stack.push_back(i);
    } else {
      if (stack.empty() || (stack.back() != i && stack.back() != match[i])) return false;
      stack.pop_back();
    }
  }
  return true;
}

// Disjoint-set over the interface strands of a gluing.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarPairing::PlanarPairing(int bottom, int top, std::vector<int> match)
    : bottom_(bottom), top_(top), match_(std::move(match)) {
  if (bottom < 0 || top < 0) throw std::invalid_argument("negative boundary count");
  const int points = bottom + top;
  if (points % 2 != 0) throw std::invalid_argument("odd boundary");
  if (static_cast<int>(match_.size()) != points) throw std::invalid_argument("match table size mismatch");
  for (int i = 0; i < points; ++i) {
    const int j = match_[i];
    if (j < 0 || j >= points || j == i || match_[j] != i)
      throw std::invalid_argument("match table is not a fixed-point-free involution");
  }
  if (!noncrossing(bottom_, top_, match_)) throw std::invalid_argument("pairing has crossing chords");
}

PlanarPairing PlanarPairing::identity(int n) {
  std::vector<int> m(2 * n);
  for (int i = 0; i < n; ++i) {
    m[i] = n + i;
    m[n + i] = i;
  }
  return PlanarPairing(n, n, std::move(m));
}

PlanarPairing PlanarPairing::rainbow_cap(int n) {
  std::vector<int> m(2 * n);
  for (int i = 0; i < 2 * n; ++i) m[i] = 2 * n - 1 - i;
  return PlanarPairing(2 * n, 0, std::move(m));
}

PlanarPairing PlanarPairing::rainbow_cup(int n) {
  std::vector<int> m(2 * n);
  for (int i = 0; i < 2 * n; ++i) m[i] = 2 * n - 1 - i;
  return PlanarPairing(0, 2 * n, std::move(m));
}

std::strong_ordering PlanarPairing::operator<=>(const PlanarPairing& o) const {
  if (auto c = bottom_ <=> o.bottom_; c != 0) return c;
  if (auto c = top_ <=> o.top_; c != 0) return c;
  return match_ <=> o.match_;
}

GluingResult glue_vertical(const PlanarPairing& upper, const PlanarPairing& lower) {
  const int m = lower.top();
  if (upper.bottom() != m)
    throw std::invalid_argument("interface strand mismatch: " + std::to_string(upper.bottom()) + " vs " +
                                std::to_string(m));
  const int B = lower.bottom();
  const int T = upper.top();

  // Interface strand i is simultaneously lower's top point B+i and upper's
  // bottom point i. Outer points of the result: lower's bottoms (0..B-1),
  // upper's tops (B..B+T-1).
  auto follow = [&](int start) {
    int i;               // current interface strand
    bool through_upper;  // which diagram the next hop crosses
    if (start < B) {
      const int x = lower.partner(start);
      if (x < B) return x;
      i = x - B;
      through_upper = true;
    } else {
      const int y = upper.partner(m + (start - B));
      if (y >= m) return B + (y - m);
      i = y;
      through_upper = false;
    }
    for (;;) {
      if (through_upper) {
        const int y = upper.partner(i);
        if (y >= m) return B + (y - m);
        i = y;
        through_upper = false;
      } else {
        const int x = lower.partner(B + i);
        if (x < B) return x;
        i = x - B;
        through_upper = true;
      }
    }
  };

  std::vector<int> match(B + T, -1);
  for (int s = 0; s < B + T; ++s) {
    if (match[s] != -1) continue;
    const int e = follow(s);
    match[s] = e;
    match[e] = s;
  }

  // Closed components of the interface graph are the removed loops: union the
  // strand segments, then discard every component touching an outer point.
  Dsu dsu(m == 0 ? 1 : m);
  for (int i = 0; i < m; ++i) {
    const int x = lower.partner(B + i);
    if (x >= B) dsu.unite(i, x - B);
    const int y = upper.partner(i);
    if (y < m) dsu.unite(i, y);
  }
  std::vector<bool> root_open(m, false), counted(m, false);
  for (int i = 0; i < m; ++i)
    if (lower.partner(B + i) < B || upper.partner(i) >= m) root_open[dsu.find(i)] = true;
  int loops = 0;
  for (int i = 0; i < m; ++i) {
    const int r = dsu.find(i);
    if (!counted[r]) {
      counted[r] = true;
      if (!root_open[r]) ++loops;
    }
  }

  return GluingResult{PlanarPairing(B, T, std::move(match)), loops};
}

PlanarPairing juxtapose(const PlanarPairing& left, const PlanarPairing& right) {
  const int B1 = left.bottom(), T1 = left.top();
  const int B2 = right.bottom(), T2 = right.top();
  const int B = B1 + B2, T = T1 + T2;
  auto map_left = [&](int i) { return i < B1 ? i : B + (i - B1); };
  auto map_right = [&](int i) { return i < B2 ? B1 + i : B + T1 + (i - B2); };
  std::vector<int> match(B + T);
  for (int i = 0; i < B1 + T1; ++i) match[map_left(i)] = map_left(left.partner(i));
  for (int i = 0; i < B2 + T2; ++i) match[map_right(i)] = map_right(right.partner(i));
  return PlanarPairing(B, T, std::move(match));
}

PlanarPairing mirror(const PlanarPairing& p) {
  const int B = p.bottom(), T = p.top();
  auto refl = [&](int i) { return i < B ? B - 1 - i : B + (T - 1 - (i - B)); };
  std::vector<int> match(B + T);
  for (int i = 0; i < B + T; ++i) match[refl(i)] = refl(p.partner(i));
  return PlanarPairing(B, T, std::move(match));
}

PlanarPairing flip_vertical(const PlanarPairing& p) {
  const int B = p.bottom(), T = p.top();
  auto flip = [&](int i) { return i < B ? T + i : i - B; };
  std::vector<int> match(B + T);
  for (int i = 0; i < B + T; ++i) match[flip(i)] = flip(p.partner(i));
  return PlanarPairing(T, B, std::move(match));
}

namespace {

// Non-crossing matchings of positions [lo, hi) in a linear order: position lo
// pairs with some j of odd offset, the two sides match independently.
void enumerate_linear(int lo, int hi, std::vector<int>& match, std::vector<std::vector<int>>& out) {
  if (lo >= hi) {
    out.push_back(match);
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    match[lo] = j;
    match[j] = lo;
    // Inner block [lo+1, j), then splice the outer block by recursing on it
    // with a temporary copy of the partial match.
    std::vector<std::vector<int>> inner;
    std::vector<int> scratch = match;
    enumerate_linear(lo + 1, j, scratch, inner);
    for (auto& in : inner) {
      std::vector<int> scratch2 = in;
      enumerate_linear(j + 1, hi, scratch2, out);
    }
  }
}

}  // namespace

std::vector<PlanarPairing> enumerate_nc_pairings(int bottom, int top) {
  if (bottom < 0 || top < 0) throw std::invalid_argument("negative boundary count");
  const int points = bottom + top;
  if (points % 2 != 0) throw std::invalid_argument("odd boundary");
  std::vector<std::vector<int>> in_positions;
  std::vector<int> scratch(points, -1);
  enumerate_linear(0, points, scratch, in_positions);

  std::vector<int> point_of(points);  // circle position -> point index
  for (int i = 0; i < points; ++i) point_of[circle_position(i, bottom, points)] = i;

  std::vector<PlanarPairing> result;
  result.reserve(in_positions.size());
  for (const auto& pm : in_positions) {
    std::vector<int> match(points);
    for (int pos = 0; pos < points; ++pos) match[point_of[pos]] = point_of[pm[pos]];
    result.emplace_back(bottom, top, std::move(match));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t catalan(int n) {
  if (n < 0) throw std::invalid_argument("negative Catalan index");
  if (n > 30) throw std::invalid_argument("Catalan index too large for exact 64-bit value");
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace tlgjs
