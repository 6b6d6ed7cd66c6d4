#include <doctest.h>

#include "tlgjs/gns.hpp"
#include "tlgjs/morphism.hpp"
#include "tlgjs/sampling.hpp"

using namespace tlgjs;

namespace {
const Rational kDelta(5, 2);

Morphism jones_e(const Rational& d) { return Rational(1) / d * compose(d, Morphism::coev(1), Morphism::ev(1)); }
}  // namespace

TEST_CASE("composition basics") {
  DiagramSampler s(1);
  for (int n = 1; n <= 3; ++n) {
    const Morphism f = s.morphism(n, n + 2);
    CHECK(compose(kDelta, Morphism::identity(n + 2), f) == f);
    CHECK(compose(kDelta, f, Morphism::identity(n)) == f);
  }
  // cap over cup closes a loop worth delta.
  CHECK(compose(kDelta, Morphism::ev(1), Morphism::coev(1)) ==
        Morphism::single(PlanarPairing(), kDelta));
  CHECK_THROWS_AS(compose(kDelta, Morphism::identity(2), Morphism::identity(3)), std::invalid_argument);
}

TEST_CASE("the rescaled cup-cap is idempotent") {
  const Morphism e = jones_e(kDelta);
  CHECK(compose(kDelta, e, e) == e);
  CHECK(dagger(e) == e);
}

TEST_CASE("tensor is monoidal with the empty diagram as unit") {
  DiagramSampler s(2);
  const Morphism f = s.morphism(2, 2), g = s.morphism(1, 3), unit = Morphism::single(PlanarPairing());
  CHECK(tensor(Morphism::identity(1), Morphism::identity(1)) == Morphism::identity(2));
  CHECK(tensor(f, unit) == f);
  CHECK(tensor(unit, f) == f);
  CHECK(tensor(tensor(f, g), f) == tensor(f, tensor(g, f)));
}

TEST_CASE("dagger is an anti-involution compatible with tensor") {
  DiagramSampler s(3);
  for (int i = 0; i < 30; ++i) {
    const Morphism f = s.morphism(2, 2), g = s.morphism(2, 2), h = s.morphism(1, 3);
    CHECK(dagger(dagger(h)) == h);
    CHECK(dagger(compose(kDelta, f, g)) == compose(kDelta, dagger(g), dagger(f)));
    CHECK(dagger(tensor(f, h)) == tensor(dagger(f), dagger(h)));
  }
  CHECK(dagger(Morphism::identity(3)) == Morphism::identity(3));
  CHECK(dagger(Morphism::coev(2)) == Morphism::ev(2));
}

TEST_CASE("zig-zag equations hold exactly through level five") {
  for (int n = 0; n <= 5; ++n) {
    const Morphism left = compose(kDelta, tensor(Morphism::ev(n), Morphism::identity(n)),
                                  tensor(Morphism::identity(n), Morphism::coev(n)));
    const Morphism right = compose(kDelta, tensor(Morphism::identity(n), Morphism::ev(n)),
                                   tensor(Morphism::coev(n), Morphism::identity(n)));
    CHECK(left == Morphism::identity(n));
    CHECK(right == Morphism::identity(n));
  }
  // ev_n composed with its own dagger closes n nested loops.
  for (int n = 0; n <= 4; ++n) {
    CHECK(scalar_part(compose(kDelta, Morphism::ev(n), dagger(Morphism::ev(n)))) == pow(kDelta, n));
  }
}

TEST_CASE("categorical trace") {
  CHECK(categorical_trace(kDelta, Morphism::identity(1), TraceSide::left) == kDelta);
  for (int n = 0; n <= 5; ++n) {
    CHECK(categorical_trace(kDelta, Morphism::identity(n), TraceSide::left) == pow(kDelta, n));
    CHECK(categorical_trace(kDelta, Morphism::identity(n), TraceSide::right) == pow(kDelta, n));
  }
  DiagramSampler s(4);
  for (int i = 0; i < 50; ++i) {
    const Morphism f = s.endomorphism(3);
    CHECK(categorical_trace(kDelta, f, TraceSide::left) == categorical_trace(kDelta, f, TraceSide::right));
  }
  CHECK_THROWS_AS(categorical_trace(kDelta, Morphism::coev(1), TraceSide::left), std::invalid_argument);
}

TEST_CASE("duality") {
  DiagramSampler s(5);
  for (int i = 0; i < 30; ++i) {
    const Morphism f = s.morphism(2, 2), g = s.morphism(2, 2);
    CHECK(dual_morphism(kDelta, dual_morphism(kDelta, f)) == f);
    CHECK(dual_morphism(kDelta, compose(kDelta, f, g)) ==
          compose(kDelta, dual_morphism(kDelta, g), dual_morphism(kDelta, f)));
    CHECK(dual_morphism(kDelta, dagger(f)) == dagger(dual_morphism(kDelta, f)));
  }
  CHECK(dual_morphism(kDelta, Morphism::identity(4)) == Morphism::identity(4));
}

TEST_CASE("operator norms through the trace representation") {
  const EndomorphismGns gns(kDelta, 2);
  const Morphism e = jones_e(kDelta);
  CHECK(gns.operator_norm(Morphism::identity(2)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gns.operator_norm(e) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gns.operator_norm(kDelta * e) == doctest::Approx(2.5).epsilon(1e-9));

  SUBCASE("Gram matrices stay positive definite") {
    for (int n = 1; n <= 4; ++n) CHECK(EndomorphismGns(kDelta, n).min_gram_eigenvalue() > 1e-9);
  }

  SUBCASE("C*-identity and submultiplicativity") {
    DiagramSampler s(6);
    for (int n = 1; n <= 3; ++n) {
      const EndomorphismGns g(kDelta, n);
      for (int i = 0; i < 8; ++i) {
        const Morphism f = s.endomorphism(n), h = s.endomorphism(n);
        const double nf = g.operator_norm(f);
        CHECK(g.operator_norm(compose(kDelta, dagger(f), f)) == doctest::Approx(nf * nf).epsilon(1e-7));
        CHECK(g.operator_norm(compose(kDelta, f, h)) <= nf * g.operator_norm(h) + 1e-7);
      }
    }
  }

  SUBCASE("degenerate trace forms are detected") {
    // At loop value one the level-two Gram matrix is singular.
    CHECK_THROWS_AS(EndomorphismGns(Rational(1), 2), std::runtime_error);
    CHECK_THROWS_AS(LoopParameter(Rational(3, 2)), std::invalid_argument);
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(rational_to_string(Rational(25, 4)) == "25/4");
  CHECK(rational_to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  // Dyadic rationals convert to doubles exactly.
  CHECK(to_double(Rational(5, 4)) == 1.25);
  CHECK(to_double(Rational(-3, 8)) == -0.375);
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}
