#include <doctest.h>

#include "tlgjs/bimodule.hpp"
#include "tlgjs/sampling.hpp"

using namespace tlgjs;

namespace {
const Rational kDelta(5, 2);
const GradedElement kUnit = GradedElement::unit();
}  // namespace

TEST_CASE("corner elements validate their shape") {
  CHECK_THROWS_AS(CornerElement(CornerShape{1, 1}, GradedElement::unit()), std::invalid_argument);
  CHECK_NOTHROW(CornerElement(CornerShape{1, 1}, GradedElement::p(1)));
}

TEST_CASE("the two actions are unital, associative and commute") {
  DiagramSampler s(41);
  for (int i = 0; i < 40; ++i) {
    const CornerElement xi = s.corner(CornerShape{1, 2}, 2, 2);
    const GradedElement a = s.corner(CornerShape{0, 0}, 2, 1).payload();
    const GradedElement b = s.corner(CornerShape{0, 0}, 2, 1).payload();
    CHECK(act(kDelta, kUnit, xi, kUnit) == xi);
    CHECK(act(kDelta, wedge(kDelta, a, b), xi, kUnit) == act(kDelta, a, act(kDelta, b, xi, kUnit), kUnit));
    CHECK(act(kDelta, kUnit, xi, wedge(kDelta, a, b)) == act(kDelta, kUnit, act(kDelta, kUnit, xi, a), b));
    CHECK(act(kDelta, a, act(kDelta, kUnit, xi, b), kUnit) == act(kDelta, kUnit, act(kDelta, a, xi, kUnit), b));
  }
}

TEST_CASE("right inner product of the single strand") {
  const CornerElement xi(CornerShape{0, 1}, GradedElement::term(GradedKey{1, 0, 1}, Morphism::identity(1)));
  const GradedElement ip = right_inner(kDelta, xi, xi);
  CHECK(voiculescu_trace(kDelta, ip) == kDelta);
  CHECK(l2_inner(kDelta, xi, xi) == kDelta);
}

TEST_CASE("inner products: symmetry, linearity, positivity") {
  DiagramSampler s(42);
  const std::vector<CornerShape> shapes = {{0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 1}};
  for (const auto& sh : shapes) {
    for (int i = 0; i < 30; ++i) {
      const CornerElement xi = s.corner(sh, 2, 2), eta = s.corner(sh, 2, 2);
      const GradedElement b = s.corner(CornerShape{0, 0}, 2, 1).payload();
      CHECK(star(right_inner(kDelta, xi, eta)) == right_inner(kDelta, eta, xi));
      CHECK(right_inner(kDelta, xi, act(kDelta, kUnit, eta, b)) == wedge(kDelta, right_inner(kDelta, xi, eta), b));
      CHECK(voiculescu_trace(kDelta, right_inner(kDelta, xi, xi)) >= 0);
      CHECK(voiculescu_trace(kDelta, left_inner(kDelta, xi, xi)) >= 0);
    }
  }
  SUBCASE("left inner product on a bottomless-left shape is the bare product") {
    for (int i = 0; i < 20; ++i) {
      const CornerElement xi = s.corner(CornerShape{0, 2}, 2, 2), eta = s.corner(CornerShape{0, 2}, 2, 2);
      CHECK(left_inner(kDelta, xi, eta) == wedge(kDelta, xi.payload(), star(eta.payload())));
    }
  }
  SUBCASE("shape mismatch is rejected") {
    const CornerElement a = s.corner(CornerShape{0, 1}, 1, 1), b = s.corner(CornerShape{1, 0}, 1, 1);
    CHECK_THROWS_AS(right_inner(kDelta, a, b), std::invalid_argument);
  }
}

TEST_CASE("trace compatibility of the two inner products") {
  DiagramSampler s(43);
  const std::vector<CornerShape> shapes = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}, {1, 2}, {2, 1}, {0, 3}, {3, 0}};
  for (const auto& sh : shapes) {
    for (int i = 0; i < 40; ++i) {
      const CornerElement xi = s.corner(sh, 2, 2), eta = s.corner(sh, 2, 2);
      CHECK(voiculescu_trace(kDelta, right_inner(kDelta, xi, eta)) ==
            voiculescu_trace(kDelta, left_inner(kDelta, eta, xi)));
    }
  }
}

TEST_CASE("dot shift") {
  DiagramSampler s(44);
  for (int i = 0; i < 40; ++i) {
    const CornerElement xi = s.corner(CornerShape{0, 1}, 3, 2), eta = s.corner(CornerShape{0, 1}, 3, 2);
    CHECK(dot_shift(xi, 0) == xi);
    CHECK(dot_shift(dot_shift(xi, 1), -1) == xi);
    // Pushing the dot right then starring equals starring then pushing left.
    CHECK(star(dot_shift(xi, 1).payload()) ==
          dot_shift(CornerElement(CornerShape{1, 0}, star(xi.payload())), -1).payload());
    // The shift is unitary for both inner products.
    CHECK(right_inner(kDelta, xi, eta) == right_inner(kDelta, dot_shift(xi, 1), dot_shift(eta, 1)));
    CHECK(left_inner(kDelta, xi, eta) == left_inner(kDelta, dot_shift(xi, 1), dot_shift(eta, 1)));
  }
  CHECK_THROWS_AS(dot_shift(CornerElement(CornerShape{0, 0}, kUnit), 1), std::invalid_argument);
}

TEST_CASE("conjugation") {
  SUBCASE("the conjugate of the one-cup unit is its mirror") {
    const CornerElement cup(CornerShape{0, 2},
                            GradedElement::term(GradedKey{0, 0, 2}, Morphism::coev(1)));
    CHECK(conjugate(cup).payload() == GradedElement::term(GradedKey{0, 0, 2}, Morphism::coev(1)));
  }
  DiagramSampler s(45);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 25; ++i) {
      const CornerElement xi = s.corner(CornerShape{0, n}, 2, 2), eta = s.corner(CornerShape{0, n}, 2, 2);
      CHECK(conjugate(conjugate(xi)) == xi);
      CHECK(right_inner(kDelta, conjugate(xi), conjugate(eta)) == left_inner(kDelta, xi, eta));
    }
  }
  CHECK_THROWS_AS(conjugate(CornerElement(CornerShape{1, 0},
                                          GradedElement::term(GradedKey{1, 1, 0}, Morphism::identity(1)))),
                  std::invalid_argument);
}

TEST_CASE("fusion") {
  DiagramSampler s(46);
  SUBCASE("single factors are fixed") {
    const CornerElement xi = s.corner(CornerShape{0, 1}, 2, 2);
    CHECK(fuse({xi}) == xi);
  }
  SUBCASE("isometry against the nested inner product") {
    for (int i = 0; i < 60; ++i) {
      const CornerElement x1 = s.corner(CornerShape{0, 1}, 2, 2), x2 = s.corner(CornerShape{0, 1}, 2, 2);
      const CornerElement y1 = s.corner(CornerShape{0, 1}, 2, 2), y2 = s.corner(CornerShape{0, 1}, 2, 2);
      const GradedElement lhs = right_inner(kDelta, fuse({x1, x2}), fuse({y1, y2}));
      const GradedElement rhs = right_inner(kDelta, x2, act(kDelta, right_inner(kDelta, x1, y1), y2, kUnit));
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("middle balance") {
    for (int i = 0; i < 40; ++i) {
      const CornerElement xi = s.corner(CornerShape{0, 1}, 2, 2), eta = s.corner(CornerShape{0, 1}, 2, 2);
      const GradedElement b = s.corner(CornerShape{0, 0}, 2, 1).payload();
      CHECK(fuse({act(kDelta, kUnit, xi, b), eta}) == fuse({xi, act(kDelta, b, eta, kUnit)}));
    }
  }
  CHECK_THROWS_AS(fuse({}), std::invalid_argument);
}

TEST_CASE("represented morphisms") {
  DiagramSampler s(47);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 30; ++i) {
      const Morphism f = s.endomorphism(n), g = s.endomorphism(n);
      const CornerElement xi = s.corner(CornerShape{0, n}, 2, 2), eta = s.corner(CornerShape{0, n}, 2, 2);
      CHECK(morphism_action(kDelta, Morphism::identity(n), xi) == xi);
      CHECK(morphism_action(kDelta, compose(kDelta, g, f), xi) ==
            morphism_action(kDelta, g, morphism_action(kDelta, f, xi)));
      CHECK(right_inner(kDelta, morphism_action(kDelta, f, xi), eta) ==
            right_inner(kDelta, xi, morphism_action(kDelta, dagger(f), eta)));
      CHECK(l2_inner(kDelta, morphism_action(kDelta, f, xi), eta) ==
            l2_inner(kDelta, xi, morphism_action(kDelta, dagger(f), eta)));
    }
  }
  CHECK_THROWS_AS(morphism_action(kDelta, Morphism::identity(2),
                                  CornerElement(CornerShape{0, 1},
                                                GradedElement::term(GradedKey{1, 0, 1}, Morphism::identity(1)))),
                  std::invalid_argument);
}

TEST_CASE("faithfulness: the represented map recovers its morphism") {
  DiagramSampler s(48);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + static_cast<int>(s.pick(3));
    const int m = (i % 2 == 0) ? n : (n > 1 ? n - 2 : n + 2);
    const Morphism f = s.morphism(n, m);
    const CornerElement strands(CornerShape{0, n}, GradedElement::term(GradedKey{n, 0, n}, Morphism::identity(n)));
    const CornerElement image = morphism_action(kDelta, f, strands);
    Morphism recovered(n, m);
    for (const auto& [k, g] : image.payload().terms()) recovered += g;
    CHECK(recovered == f);
  }
}

TEST_CASE("tensorator naturality and conjugation coherence") {
  DiagramSampler s(49);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + static_cast<int>(s.pick(2)), m = 1 + static_cast<int>(s.pick(2));
    const Morphism f = s.endomorphism(n), g = s.endomorphism(m);
    const CornerElement xi = s.corner(CornerShape{0, n}, 2, 2), eta = s.corner(CornerShape{0, m}, 2, 2);
    CHECK(tensorator(morphism_action(kDelta, f, xi), morphism_action(kDelta, g, eta)) ==
          morphism_action(kDelta, tensor(f, g), tensorator(xi, eta)));
    CHECK(conj_structure(conj_structure(xi)) == xi);
    CHECK(tensorator(conj_structure(xi), conj_structure(eta)) == conj_structure(tensorator(eta, xi)));
    const Morphism fbar = dual_morphism(kDelta, dagger(f));
    CHECK(conj_structure(morphism_action(kDelta, fbar, xi)) ==
          morphism_action(kDelta, f, conj_structure(xi)));
  }
}

TEST_CASE("index data from supplied bases") {
  const CornerElement unit(CornerShape{0, 0}, kUnit);
  DiagramSampler s(50);
  std::vector<CornerElement> samples;
  for (int i = 0; i < 5; ++i) samples.push_back(s.corner(CornerShape{0, 0}, 2, 2));

  SUBCASE("the ground corner over itself has index one") {
    const auto [rind, lind] = index_from_bases(kDelta, {unit}, {unit}, samples);
    CHECK(rind == Rational(1));
    CHECK(lind == Rational(1));
  }
  SUBCASE("a non-reproducing family is rejected") {
    const CornerElement bogus(CornerShape{0, 0}, Rational(2) * kUnit);
    CHECK_THROWS_AS(index_from_bases(kDelta, {bogus}, {bogus}, samples), BasisCheckError);
  }
  SUBCASE("the expectation surrogate certifies the module index") {
    const GradedElement lhs = kDelta * tower_expectation(kDelta, GradedElement::p(1), 1);
    CHECK(lhs == kDelta * GradedElement::p(1));
    CHECK(iota_preimage(lhs, 1) == kDelta * kUnit);
  }
}

TEST_CASE("minimality: balanced closures on the level-one commutant") {
  DiagramSampler s(51);
  for (int i = 0; i < 40; ++i) {
    const GradedElement t =
        Rational(s.coefficient()) * GradedElement::p(1) + Rational(s.coefficient()) * GradedElement::unit();
    const Morphism f = frobenius_preimage(kDelta, project_corner(kDelta, t, 1, 1), 1, 1);
    CHECK(categorical_trace(kDelta, f, TraceSide::left) == categorical_trace(kDelta, f, TraceSide::right));
  }
}
