#include "tlgjs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <json.hpp>

#include "tlgjs/bimodule.hpp"
#include "tlgjs/fock.hpp"
#include "tlgjs/gns.hpp"
#include "tlgjs/sampling.hpp"

namespace tlgjs {

namespace {

// Pinned acceptance thresholds.
constexpr double kNormTol = 1e-7;       // C*-identity, isometry and norm comparisons
constexpr double kEigMargin = 1e-9;     // Gram positive-definiteness margins
constexpr double kPsdMargin = -1e-8;    // Pimsner-Popa eigenvalue floor

struct Ctx {
  const SuiteConfig& cfg;
  const Rational& delta;
  std::vector<CheckRecord>& out;

  DiagramSampler sampler(std::uint64_t offset) const { return DiagramSampler(cfg.seed + offset); }

  template <typename Fn>
  void check(const std::string& name, const std::string& anchor, const std::string& mode, const std::string& policy,
             const std::string& metric_kind, double tol, Fn&& body) {
    CheckRecord rec;
    rec.name = name;
    rec.anchor = anchor;
    rec.mode = mode;
    rec.policy = policy;
    rec.metric_kind = metric_kind;
    rec.tol = tol;
    const auto start = std::chrono::steady_clock::now();
    try {
      rec.metric = body(rec);
      rec.pass = metric_kind == "residual" ? rec.metric <= tol : rec.metric >= tol;
    } catch (const BottomBudgetError& e) {
      rec.pass = false;
      rec.metric = std::numeric_limits<double>::quiet_NaN();
      rec.note = std::string("budget exceeded: ") + e.what();
    }
    rec.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(std::chrono::steady_clock::now() - start)
            .count();
    out.push_back(std::move(rec));
  }

  template <typename Fn>
  void exact(const std::string& name, const std::string& anchor, Fn&& body) {
    check(name, anchor, "exact", "gate", "residual", 0.0,
          [&](CheckRecord&) { return static_cast<double>(body()); });
  }
};

Morphism jones_projection(const Rational& delta) {
  return Rational(1) / delta * compose(delta, Morphism::coev(1), Morphism::ev(1));
}

// ---------------------------------------------------------------- category

void suite_category(Ctx& c) {
  const Rational& d = c.delta;
  const int top_level = std::min(c.cfg.max_level, 6);

  c.exact("zigzag", "eqn::zz", [&] {
    int bad = 0;
    for (int n = 1; n <= top_level; ++n) {
      const Morphism left = compose(d, tensor(Morphism::ev(n), Morphism::identity(n)),
                                    tensor(Morphism::identity(n), Morphism::coev(n)));
      const Morphism right = compose(d, tensor(Morphism::identity(n), Morphism::ev(n)),
                                     tensor(Morphism::coev(n), Morphism::identity(n)));
      bad += left != Morphism::identity(n);
      bad += right != Morphism::identity(n);
    }
    return bad;
  });

  c.exact("loop-values", "notation::delta", [&] {
    int bad = 0;
    for (int n = 0; n <= top_level; ++n)
      bad += categorical_trace(d, Morphism::identity(n), TraceSide::left) != pow(d, n);
    return bad;
  });

  c.exact("balancing", "eqn::balancing", [&] {
    auto s = c.sampler(11);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(s.pick(top_level));
      const Morphism f = s.endomorphism(n);
      bad += categorical_trace(d, f, TraceSide::left) != categorical_trace(d, f, TraceSide::right);
    }
    return bad;
  });

  c.exact("dagger-structure", "daggerCat", [&] {
    auto s = c.sampler(12);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const Morphism f = s.morphism(n, n), g = s.morphism(n, n), h = s.morphism(n - 1, n + 1);
      bad += dagger(dagger(h)) != h;
      bad += dagger(compose(d, g, f)) != compose(d, dagger(f), dagger(g));
      bad += dagger(tensor(f, h)) != tensor(dagger(f), dagger(h));
    }
    return bad;
  });

  c.exact("dual-structure", "eqn::dualmap", [&] {
    auto s = c.sampler(13);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const Morphism f = s.morphism(n, n), g = s.morphism(n, n);
      bad += dual_morphism(d, dual_morphism(d, f)) != f;
      bad += dual_morphism(d, compose(d, f, g)) != compose(d, dual_morphism(d, g), dual_morphism(d, f));
      bad += dual_morphism(d, dagger(f)) != dagger(dual_morphism(d, f));
      bad += dual_morphism(d, Morphism::identity(n)) != Morphism::identity(n);
    }
    return bad;
  });

  c.exact("frobenius-antihomomorphism", "prop::AFalgs", [&] {
    auto s = c.sampler(14);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const Morphism f = s.endomorphism(n), g = s.endomorphism(n);
      bad += frobenius(compose(d, f, g)) != wedge(d, frobenius(g), frobenius(f));
    }
    return bad;
  });

  c.exact("frobenius-star", "prop::AFalgs", [&] {
    auto s = c.sampler(15);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const Morphism f = s.morphism(n, n);
      bad += frobenius(dagger(f)) != star(frobenius(f));
    }
    return bad;
  });

  c.check("gram-positive-definite", "def::C*Cat", "float", "gate", "margin", c.cfg.float_tol, [&](CheckRecord&) {
    double worst = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= std::min(top_level, 4); ++n) worst = std::min(worst, EndomorphismGns(d, n).min_gram_eigenvalue());
    return worst;
  });

  c.check("operator-norm-values", "def::C*Cat", "float", "gate", "residual", kEigMargin, [&](CheckRecord&) {
    const EndomorphismGns gns(d, 2);
    const Morphism e = jones_projection(d);
    double worst = std::abs(gns.operator_norm(Morphism::identity(2)) - 1.0);
    worst = std::max(worst, std::abs(gns.operator_norm(e) - 1.0));
    worst = std::max(worst, std::abs(gns.operator_norm(d * e) - to_double(d)));
    return worst;
  });

  c.check("cstar-identity", "def::C*Cat", "float", "gate", "residual", kNormTol, [&](CheckRecord&) {
    auto s = c.sampler(16);
    double worst = 0.0;
    for (int n = 1; n <= std::min(top_level, 4); ++n) {
      const EndomorphismGns gns(d, n);
      for (int i = 0; i < 10; ++i) {
        const Morphism f = s.endomorphism(n);
        const double nf = gns.operator_norm(f);
        worst = std::max(worst, std::abs(gns.operator_norm(compose(d, dagger(f), f)) - nf * nf));
      }
    }
    return worst;
  });

  c.check("norm-submultiplicative", "def::C*Cat", "float", "gate", "residual", kNormTol, [&](CheckRecord&) {
    auto s = c.sampler(17);
    double worst = 0.0;
    for (int n = 1; n <= std::min(top_level, 4); ++n) {
      const EndomorphismGns gns(d, n);
      for (int i = 0; i < 10; ++i) {
        const Morphism f = s.endomorphism(n), g = s.endomorphism(n);
        const double excess = gns.operator_norm(compose(d, f, g)) - gns.operator_norm(f) * gns.operator_norm(g);
        worst = std::max(worst, excess);
      }
    }
    return std::max(worst, 0.0);
  });
}

// ------------------------------------------------------------ gjs products

void suite_products(Ctx& c) {
  const Rational& d = c.delta;

  c.exact("wedge-associative", "rmk::GradProd", [&] {
    auto s = c.sampler(21);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(3, 3, 2), y = s.graded(3, 3, 2), z = s.graded(3, 3, 2);
      bad += wedge(d, wedge(d, x, y), z) != wedge(d, x, wedge(d, y, z));
    }
    return bad;
  });

  c.exact("wedge-unit", "notation::corners", [&] {
    auto s = c.sampler(22);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const GradedElement x = s.corner(CornerShape{0, 0}, 4, 2).payload();
      bad += wedge(d, x, GradedElement::unit()) != x;
      bad += wedge(d, GradedElement::unit(), x) != x;
    }
    return bad;
  });

  c.exact("walker-associative", "eqn::WalkerProduct", [&] {
    auto s = c.sampler(23);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(3, 3, 2), y = s.graded(3, 3, 2), z = s.graded(3, 3, 2);
      bad += walker(d, walker(d, x, y), z) != walker(d, x, walker(d, y, z));
    }
    return bad;
  });

  c.exact("pi-composition", "eqn::WalkerProduct", [&] {
    // Operator picture of the same law: acting by x then by y agrees with
    // acting by the Walker product.
    auto s = c.sampler(24);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(2, 2, 2), y = s.graded(2, 2, 2), v = s.graded(3, 3, 2);
      bad += walker(d, x, walker(d, y, v)) != walker(d, walker(d, x, y), v);
    }
    return bad;
  });

  c.exact("star-antihomomorphism", "Grinfty", [&] {
    auto s = c.sampler(25);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(3, 3, 2), y = s.graded(3, 3, 2);
      bad += star(star(x)) != x;
      bad += star(wedge(d, x, y)) != wedge(d, star(y), star(x));
      bad += star(walker(d, x, y)) != walker(d, star(y), star(x));
    }
    return bad;
  });

  c.exact("walker-k0-is-wedge", "eqn::WalkerProduct", [&] {
    auto s = c.sampler(26);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(3, 3, 2), y = s.graded(3, 3, 2);
      bad += walker_term(d, x, y, 0) != wedge(d, x, y);
      const GradedElement ground = s.ground_level(2, 1);
      bad += walker(d, ground, y) != wedge(d, ground, y);
    }
    return bad;
  });

  c.check("jones-moment-vs-gns-norm", "moment-norm-formula", "float", "gate", "margin", 0.0, [&](CheckRecord& rec) {
    const GradedElement e = frobenius(jones_projection(d));
    const double gns = GroundAlgebraGns(d, 2).operator_norm(e);
    const auto est = moment_norm_estimates(d, e, 2, c.cfg.moment_p_max, c.cfg.max_bottom);
    rec.note = "estimate " + std::to_string(est.back()) + " of norm " + std::to_string(gns);
    if (std::abs(gns - 1.0) > kNormTol) return -1.0;
    return est.back() - 0.97 * gns;
  });

  c.check("moment-monotone", "moment-norm-formula", "float", "gate", "margin", -1e-12, [&](CheckRecord&) {
    auto s = c.sampler(27);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 50; ++i) {
      // Alternate deep estimates on single diagrams with shallow ones on
      // two-term elements; the term count squares with each power.
      const CornerElement a = s.corner(CornerShape{1, 1}, 2, i % 2 == 0 ? 1 : 2);
      if (a.payload().is_zero()) continue;
      const auto est = moment_norm_estimates(d, a.payload(), 1, i % 2 == 0 ? 4 : 2, c.cfg.max_bottom);
      for (std::size_t k = 1; k < est.size(); ++k) worst = std::min(worst, est[k] - est[k - 1]);
    }
    return worst;
  });

  c.exact("moment-budget-guard", "moment-norm-formula", [&] {
    auto s = c.sampler(28);
    const CornerElement a = s.corner(CornerShape{1, 1}, 4, 3);
    try {
      moment_norm_estimates(d, a.payload(), 1, 256, 8);
      return 1;
    } catch (const BottomBudgetError&) {
      return 0;
    }
  });
}

// -------------------------------------------------------- traces, positivity

void suite_traces(Ctx& c) {
  const Rational& d = c.delta;

  c.exact("trace-tracial", "rmk::GradProd", [&] {
    auto s = c.sampler(31);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      const GradedElement x = s.graded(3, 3, 2), y = s.graded(3, 3, 2);
      bad += voiculescu_trace(d, wedge(d, x, y)) != voiculescu_trace(d, wedge(d, y, x));
    }
    return bad;
  });

  c.check("trace-gram-positive", "rmk::GradProd", "float", "gate", "margin", kEigMargin, [&](CheckRecord& rec) {
    std::vector<std::pair<GradedKey, PlanarPairing>> basis;
    for (int l = 0; 2 * l <= 6; ++l)
      for (int b = 0; b + 2 * l <= 6; b += 2)
        for (const auto& p : enumerate_nc_pairings(b, 2 * l)) basis.emplace_back(GradedKey{b, l, l}, p);
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd gram(n, n);
    for (int i = 0; i < n; ++i) {
      const GradedElement di = star(GradedElement::term(basis[i].first, Morphism::single(basis[i].second)));
      for (int j = 0; j < n; ++j) {
        const GradedElement dj = GradedElement::term(basis[j].first, Morphism::single(basis[j].second));
        gram(i, j) = to_double(voiculescu_trace(d, wedge(d, di, dj)));
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    rec.note = "dimension " + std::to_string(n);
    return eig.eigenvalues().minCoeff();
  });

  c.exact("normalized-trace-of-units", "notation::corners", [&] {
    int bad = 0;
    for (int n = 0; n <= 4; ++n) {
      bad += voiculescu_trace(d, GradedElement::p(n)) != pow(d, n);
      bad += normalized_trace(d, GradedElement::p(n), n) != Rational(1);
    }
    return bad;
  });

  c.exact("ground-weight", "prop:weights", [&] {
    auto s = c.sampler(32);
    int bad = 0;
    bad += ground_weight(d, GradedElement::unit()) != Rational(1);
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const Morphism f = s.endomorphism(n);
      bad += ground_weight(d, frobenius(f)) != categorical_trace(d, f, TraceSide::left);
    }
    return bad;
  });

  c.exact("ground-expectation-tracial", "prop:weights", [&] {
    auto s = c.sampler(33);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(2, 2, 2), y = s.graded(2, 2, 2);
      const Rational lhs = ground_weight(d, ground_expectation(walker(d, x, y)));
      const Rational rhs = ground_weight(d, ground_expectation(walker(d, y, x)));
      bad += lhs != rhs;
    }
    return bad;
  });

  c.exact("corner-compression", "notation::corners", [&] {
    auto s = c.sampler(34);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const GradedElement x = s.graded(2, 3, 3);
      const GradedElement once = project_corner(d, x, 1, 1);
      GradedElement filtered;
      for (const auto& [k, f] : x.terms())
        if (k.l == 1 && k.r == 1) filtered.add(k, f);
      bad += once != filtered;
      bad += project_corner(d, once, 1, 1) != once;
    }
    return bad;
  });
}

// -------------------------------------------------------------------- tower

void suite_tower(Ctx& c) {
  const Rational& d = c.delta;

  c.exact("iota-homomorphism", "tower-inclusion", [&] {
    auto s = c.sampler(41);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const GradedElement x = s.corner(CornerShape{0, 0}, 4, 2).payload();
      const GradedElement y = s.corner(CornerShape{0, 0}, 4, 2).payload();
      bad += iota(wedge(d, x, y), n) != wedge(d, iota(x, n), iota(y, n));
      bad += iota(star(x), n) != star(iota(x, n));
      bad += iota(GradedElement::unit(), n) != GradedElement::p(n);
    }
    return bad;
  });

  c.exact("iota-trace-compatible", "tower-inclusion", [&] {
    auto s = c.sampler(42);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const GradedElement x = s.corner(CornerShape{0, 0}, 4, 2).payload();
      bad += normalized_trace(d, x, 0) != normalized_trace(d, iota(x, n), n);
    }
    return bad;
  });

  c.exact("tower-expectation", "tower-conditional-expectation", [&] {
    auto s = c.sampler(43);
    int bad = 0;
    for (int i = 0; i < 60; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const GradedElement m = s.corner(CornerShape{n, n}, 2, 2).payload();
      const GradedElement em = tower_expectation(d, m, n);
      bad += tower_expectation(d, em, n) != em;
      bad += normalized_trace(d, em, n) != normalized_trace(d, m, n);
      const GradedElement a = iota(s.corner(CornerShape{0, 0}, 2, 1).payload(), n);
      bad += tower_expectation(d, a, n) != a;
      bad += tower_expectation(d, wedge(d, a, wedge(d, m, a)), n) != wedge(d, a, wedge(d, em, a));
    }
    return bad;
  });

  c.check("pimsner-popa-index-bound", "RelCommutants", "float", "gate", "margin", kPsdMargin, [&](CheckRecord&) {
    auto s = c.sampler(44);
    double worst = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 2; ++n) {
      const EndomorphismGns gns(d, n);
      for (int i = 0; i < 15; ++i) {
        GradedElement cc = s.component(GradedKey{0, n, n});
        if (cc.is_zero()) cc = GradedElement::p(n);
        const GradedElement b = wedge(d, star(cc), cc);
        const GradedElement h = tower_expectation(d, b, n) - pow(d, -2 * n) * b;
        worst = std::min(worst, gns.min_eigenvalue(frobenius_preimage(d, h, n, n)));
      }
    }
    return worst;
  });

  c.check("pimsner-popa-entropic-bound", "entropic-bound", "float", "report", "margin", kPsdMargin,
          [&](CheckRecord& rec) {
            auto s = c.sampler(44);  // same positives as the gated check
            double worst = std::numeric_limits<double>::infinity();
            for (int n = 1; n <= 2; ++n) {
              const EndomorphismGns gns(d, n);
              for (int i = 0; i < 15; ++i) {
                GradedElement cc = s.component(GradedKey{0, n, n});
                if (cc.is_zero()) cc = GradedElement::p(n);
                const GradedElement b = wedge(d, star(cc), cc);
                const GradedElement h = tower_expectation(d, b, n) - pow(d, -n) * b;
                worst = std::min(worst, gns.min_eigenvalue(frobenius_preimage(d, h, n, n)));
              }
            }
            rec.note = "stated constant delta^-n; informational only";
            return worst;
          });

  c.exact("relative-commutant", "RelCommutants", [&] {
    auto s = c.sampler(45);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      GradedElement t = Rational(s.coefficient()) * GradedElement::unit();
      t += s.component(GradedKey{0, 1, 1});
      const GradedElement z = iota(s.corner(CornerShape{0, 0}, 4, 2).payload(), 1);
      bad += wedge(d, t, z) != wedge(d, z, t);
    }
    return bad;
  });

  c.exact("level-embedding-homomorphism", "lemma::norm", [&] {
    auto s = c.sampler(46);
    int bad = 0;
    for (int i = 0; i < 60; ++i) {
      const GradedElement x = s.ground_level(2, 2), y = s.ground_level(2, 2);
      bad += level_embedding(d, wedge(d, x, y), 1) != wedge(d, level_embedding(d, x, 1), level_embedding(d, y, 1));
      bad += level_embedding(d, star(x), 1) != star(level_embedding(d, x, 1));
    }
    return bad;
  });

  c.check("level-embedding-isometric", "lemma::norm", "float", "gate", "residual", kNormTol, [&](CheckRecord&) {
    auto s = c.sampler(47);
    const GroundAlgebraGns g2(d, 2), g3(d, 3);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const GradedElement x = s.ground_level(2, 3);
      worst = std::max(worst, std::abs(g2.operator_norm(x) - g3.operator_norm(level_embedding(d, x, 1))));
    }
    return worst;
  });
}

// --------------------------------------------------------------------- fock

void suite_fock(Ctx& c) {
  const Rational& d = c.delta;
  const int depth = 6;

  auto random_vector = [&](DiagramSampler& s, int max_sector) {
    FockVector v(depth);
    for (int b = 0; b <= max_sector; ++b) {
      const int l = static_cast<int>(s.pick(2));
      const int r = (b % 2 == 0) ? l : l + 1;  // keep b + l + r even
      v.add_sector(b, s.component(GradedKey{b, l, r}));
    }
    return v;
  };

  c.exact("pimsner-relation", "dfn::Fock", [&] {
    auto s = c.sampler(51);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const CreationSymbol xi(s.creation_symbol(2)), eta(s.creation_symbol(2));
      const FockVector v = random_vector(s, depth - 2);
      const FockVector lhs = annihilate(d, xi, create(d, eta, v));
      const GradedElement coeff = module_inner(d, xi.xi, eta.xi);
      FockVector rhs(depth);
      for (const auto& [b, x] : v.sectors()) rhs.add_sector(b, wedge(d, coeff, x));
      bad += lhs != rhs;
    }
    return bad;
  });

  c.exact("annihilate-vacuum", "annihilation-rule", [&] {
    auto s = c.sampler(52);
    int bad = 0;
    for (int i = 0; i < 20; ++i) {
      const CreationSymbol xi(s.creation_symbol(2));
      FockVector v(depth);
      v.add_sector(0, s.corner(CornerShape{1, 1}, 0, 1).payload());
      bad += !annihilate(d, xi, v).sectors().empty();
    }
    return bad;
  });

  c.exact("creation-adjoint", "dfn::Fock", [&] {
    auto s = c.sampler(53);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const CreationSymbol xi(s.creation_symbol(2));
      const FockVector v = random_vector(s, depth - 2), w = random_vector(s, depth - 1);
      bad += fock_inner(d, create(d, xi, v), w) != fock_inner(d, v, annihilate(d, xi, w));
    }
    return bad;
  });

  c.exact("sector-identification", "prop::intertwiner", [&] {
    auto s = c.sampler(54);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const CreationSymbol xi(s.creation_symbol(2));
      const GradedElement eta = s.component(GradedKey{2, 1, 1});
      FockVector v(depth);
      v.add_sector(2, eta);
      bad += create(d, xi, v).sector(3) != identify_sectors(d, xi.xi, eta);
    }
    return bad;
  });

  c.exact("sector-identification-associative", "prop:easytensor", [&] {
    auto s = c.sampler(55);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const GradedElement a = s.component(GradedKey{1, 1, 0}), b = s.component(GradedKey{1, 0, 1}),
                          cc = s.component(GradedKey{2, 1, 1});
      bad += identify_sectors(d, identify_sectors(d, a, b), cc) != identify_sectors(d, a, identify_sectors(d, b, cc));
    }
    return bad;
  });

  c.exact("walker-action", "eqn::WalkerProduct", [&] {
    auto s = c.sampler(56);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const CreationSymbol xi(s.self_adjoint_symbol(2));
      const FockVector v = random_vector(s, depth - 2);
      const FockVector lhs = [&] {
        FockVector sum(depth);
        const FockVector up = create(d, xi, v), down = annihilate(d, xi, v);
        for (const auto& [b, x] : up.sectors()) sum.add_sector(b, x);
        for (const auto& [b, x] : down.sectors()) sum.add_sector(b, x);
        return sum;
      }();
      FockVector rhs(depth);
      for (const auto& [b, x] : v.sectors()) {
        const GradedElement image = walker(d, xi.xi, x);
        for (const auto& [k, f] : image.terms()) rhs.add_sector(k.b, GradedElement::term(k, f));
      }
      bad += lhs != rhs;
    }
    return bad;
  });

  c.exact("truncation-flag", "dfn::Fock", [&] {
    const CreationSymbol xi(GradedElement::term(GradedKey{1, 0, 1}, Morphism::identity(1)));
    FockVector v(2);
    v.add_sector(1, GradedElement::term(GradedKey{1, 1, 0}, Morphism::identity(1)));
    const FockVector pushed = create(d, xi, v);
    return (pushed.truncated() ? 0 : 1) + (pushed.sectors().empty() ? 0 : 1);
  });

  c.exact("inner-adjoint-compatible", "prop:prehilbert", [&] {
    auto s = c.sampler(58);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(2, 2, 2), y = s.graded(2, 2, 2);
      bad += star(module_inner(d, x, y)) != module_inner(d, y, x);
    }
    return bad;
  });

  c.exact("inner-right-linearity", "prop:prehilbert", [&] {
    auto s = c.sampler(59);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const GradedElement x = s.graded(2, 2, 2), y = s.graded(2, 2, 2);
      const GradedElement a = s.ground_level(2, 2);
      bad += module_inner(d, x, wedge(d, y, a)) != wedge(d, module_inner(d, x, y), a);
      bad += module_inner(d, x, wedge(d, star(a), y)) != module_inner(d, wedge(d, a, x), y);
    }
    return bad;
  });
}

// ---------------------------------------------------------------- bimodules

void suite_bimodules(Ctx& c) {
  const Rational& d = c.delta;

  const std::vector<CornerShape> shapes = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}, {2, 1}, {1, 2}, {0, 3}, {3, 0}};

  c.exact("corner-actions", "notation::copies", [&] {
    auto s = c.sampler(61);
    int bad = 0;
    for (int i = 0; i < 60; ++i) {
      const CornerShape sh = shapes[s.pick(shapes.size())];
      const CornerElement xi = s.corner(sh, 2, 2);
      const GradedElement a = s.corner(CornerShape{0, 0}, 2, 1).payload();
      const GradedElement b = s.corner(CornerShape{0, 0}, 2, 1).payload();
      bad += act(d, GradedElement::unit(), xi, GradedElement::unit()) != xi;
      bad += act(d, wedge(d, a, b), xi, GradedElement::unit()) !=
             act(d, a, act(d, b, xi, GradedElement::unit()), GradedElement::unit());
      bad += act(d, a, act(d, GradedElement::unit(), xi, b), GradedElement::unit()) !=
             act(d, GradedElement::unit(), act(d, a, xi, GradedElement::unit()), b);
    }
    return bad;
  });

  c.exact("inner-product-structure", "dfn::bimodule", [&] {
    auto s = c.sampler(62);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const CornerShape sh = shapes[s.pick(shapes.size())];
      const CornerElement xi = s.corner(sh, 2, 2), eta = s.corner(sh, 2, 2);
      const GradedElement b = s.corner(CornerShape{0, 0}, 2, 1).payload();
      bad += star(right_inner(d, xi, eta)) != right_inner(d, eta, xi);
      bad += star(left_inner(d, xi, eta)) != left_inner(d, eta, xi);
      bad += right_inner(d, xi, act(d, GradedElement::unit(), eta, b)) != wedge(d, right_inner(d, xi, eta), b);
      bad += right_inner(d, act(d, star(b), xi, GradedElement::unit()), eta) !=
             right_inner(d, xi, act(d, b, eta, GradedElement::unit()));
    }
    return bad;
  });

  c.exact("inner-positivity", "dfn::bimodule", [&] {
    auto s = c.sampler(63);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const CornerShape sh = shapes[s.pick(shapes.size())];
      const CornerElement xi = s.corner(sh, 2, 2);
      bad += voiculescu_trace(d, right_inner(d, xi, xi)) < 0;
      bad += voiculescu_trace(d, left_inner(d, xi, xi)) < 0;
    }
    return bad;
  });

  c.exact("trace-compatibility", "eqn::ComTrace", [&] {
    auto s = c.sampler(64);
    int bad = 0;
    for (const auto& sh : shapes) {
      if (sh.l + sh.r > 3) continue;
      for (int i = 0; i < 200; ++i) {
        const CornerElement xi = s.corner(sh, 2, 2), eta = s.corner(sh, 2, 2);
        bad += voiculescu_trace(d, right_inner(d, xi, eta)) != voiculescu_trace(d, left_inner(d, eta, xi));
      }
    }
    return bad;
  });

  c.check("l2-gram-positive", "notation::Ltwo", "float", "gate", "margin", kEigMargin, [&](CheckRecord& rec) {
    // All diagrams of shape (0, 1) with at most 6 boundary points.
    std::vector<CornerElement> basis;
    for (int b = 1; b + 1 <= 6; b += 2)
      for (const auto& p : enumerate_nc_pairings(b, 1))
        basis.emplace_back(CornerShape{0, 1}, GradedElement::term(GradedKey{b, 0, 1}, Morphism::single(p)));
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd gram(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram(i, j) = to_double(l2_inner(d, basis[i], basis[j]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    rec.note = "dimension " + std::to_string(n);
    return eig.eigenvalues().minCoeff();
  });

  c.exact("dot-shift", "remark:changeX", [&] {
    auto s = c.sampler(65);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const CornerElement xi = s.corner(CornerShape{0, 1}, 3, 2), eta = s.corner(CornerShape{0, 1}, 3, 2);
      bad += dot_shift(xi, 0) != xi;
      bad += dot_shift(dot_shift(xi, 1), -1) != xi;
      bad += star(dot_shift(xi, 1).payload()) !=
             dot_shift(CornerElement(CornerShape{1, 0}, star(xi.payload())), -1).payload();
      bad += right_inner(d, xi, eta) != right_inner(d, dot_shift(xi, 1), dot_shift(eta, 1));
      bad += left_inner(d, xi, eta) != left_inner(d, dot_shift(xi, 1), dot_shift(eta, 1));
    }
    return bad;
  });

  c.check("dot-shift-general-shapes", "remark:changeX", "exact", "report", "residual", 0.0, [&](CheckRecord& rec) {
    auto s = c.sampler(66);
    int bad = 0;
    for (const auto& sh : shapes) {
      if (sh.r == 0 || sh.l + sh.r > 3) continue;
      for (int i = 0; i < 50; ++i) {
        const CornerElement xi = s.corner(sh, 2, 2), eta = s.corner(sh, 2, 2);
        bad += right_inner(d, xi, eta) != right_inner(d, dot_shift(xi, 1), dot_shift(eta, 1));
        bad += left_inner(d, xi, eta) != left_inner(d, dot_shift(xi, 1), dot_shift(eta, 1));
      }
    }
    rec.note = "unitarity of the dot shift beyond the gated (0,1)/(1,0) case";
    return static_cast<double>(bad);
  });

  c.exact("conjugation", "remark:changeX", [&] {
    auto s = c.sampler(67);
    int bad = 0;
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < 40; ++i) {
        const CornerElement xi = s.corner(CornerShape{0, n}, 2, 2), eta = s.corner(CornerShape{0, n}, 2, 2);
        bad += conjugate(conjugate(xi)) != xi;
        bad += right_inner(d, conjugate(xi), conjugate(eta)) != left_inner(d, xi, eta);
      }
    }
    return bad;
  });

  c.exact("fusion-isometry", "lemma::isomorphism", [&] {
    auto s = c.sampler(68);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const CornerElement x1 = s.corner(CornerShape{0, 1}, 2, 2), x2 = s.corner(CornerShape{0, 1}, 2, 2);
      const CornerElement y1 = s.corner(CornerShape{0, 1}, 2, 2), y2 = s.corner(CornerShape{0, 1}, 2, 2);
      const GradedElement lhs = right_inner(d, fuse({x1, x2}), fuse({y1, y2}));
      const GradedElement rhs = right_inner(d, x2, act(d, right_inner(d, x1, y1), y2, GradedElement::unit()));
      bad += lhs != rhs;
    }
    for (int i = 0; i < 50; ++i) {
      std::vector<CornerElement> w, wp;
      for (int k = 0; k < 3; ++k) {
        w.emplace_back(s.corner(CornerShape{0, 1}, 2, 2));
        wp.emplace_back(s.corner(CornerShape{0, 1}, 2, 2));
      }
      const GradedElement lhs = right_inner(d, fuse(w), fuse(wp));
      GradedElement nested = right_inner(d, w[0], wp[0]);
      nested = right_inner(d, w[1], act(d, nested, wp[1], GradedElement::unit()));
      nested = right_inner(d, w[2], act(d, nested, wp[2], GradedElement::unit()));
      bad += lhs != nested;
    }
    return bad;
  });

  c.exact("fusion-middle-balance", "lemma::isomorphism", [&] {
    auto s = c.sampler(69);
    int bad = 0;
    for (int i = 0; i < 60; ++i) {
      const CornerElement xi = s.corner(CornerShape{0, 1}, 2, 2), eta = s.corner(CornerShape{0, 1}, 2, 2);
      const GradedElement b = s.corner(CornerShape{0, 0}, 2, 1).payload();
      const CornerElement lhs = fuse({act(d, GradedElement::unit(), xi, b), eta});
      const CornerElement rhs = fuse({xi, act(d, b, eta, GradedElement::unit())});
      bad += lhs != rhs;
    }
    return bad;
  });

  c.exact("functor-laws", "lemma::bound", [&] {
    auto s = c.sampler(70);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const Morphism f = s.endomorphism(n), g = s.endomorphism(n);
      const CornerElement xi = s.corner(CornerShape{0, n}, 2, 2), eta = s.corner(CornerShape{0, n}, 2, 2);
      bad += morphism_action(d, Morphism::identity(n), xi) != xi;
      bad += morphism_action(d, compose(d, g, f), xi) != morphism_action(d, g, morphism_action(d, f, xi));
      bad += right_inner(d, morphism_action(d, f, xi), eta) != right_inner(d, xi, morphism_action(d, dagger(f), eta));
      bad += l2_inner(d, morphism_action(d, f, xi), eta) != l2_inner(d, xi, morphism_action(d, dagger(f), eta));
    }
    return bad;
  });

  c.exact("functor-faithful", "lemma::bound", [&] {
    auto s = c.sampler(71);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(s.pick(3));
      const int m = (i % 2 == 0) ? n : (n > 1 ? n - 2 : n + 2);
      const Morphism f = s.morphism(n, m);
      // Apply the represented map to the bare strands and read the morphism
      // back off the single surviving grading component.
      const CornerElement strands(CornerShape{0, n}, GradedElement::term(GradedKey{n, 0, n}, Morphism::identity(n)));
      const CornerElement image = morphism_action(d, f, strands);
      Morphism recovered(n, m);
      for (const auto& [k, g] : image.payload().terms()) recovered += g;
      bad += recovered != f;
    }
    return bad;
  });

  c.exact("tensorator-naturality", "tensorator", [&] {
    auto s = c.sampler(72);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const Morphism f = s.endomorphism(1 + s.pick(2)), g = s.endomorphism(1 + s.pick(2));
      const CornerElement xi = s.corner(CornerShape{0, f.source()}, 2, 2);
      const CornerElement eta = s.corner(CornerShape{0, g.source()}, 2, 2);
      const CornerElement lhs = tensorator(morphism_action(d, f, xi), morphism_action(d, g, eta));
      const CornerElement rhs = morphism_action(d, tensor(f, g), tensorator(xi, eta));
      bad += lhs != rhs;
    }
    return bad;
  });

  c.exact("conjugation-structure", "dfn::BiInvolutive", [&] {
    auto s = c.sampler(73);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + static_cast<int>(s.pick(2)), m = 1 + static_cast<int>(s.pick(2));
      const CornerElement xi = s.corner(CornerShape{0, n}, 2, 2), eta = s.corner(CornerShape{0, m}, 2, 2);
      bad += conj_structure(conj_structure(xi)) != xi;
      bad += tensorator(conj_structure(xi), conj_structure(eta)) != conj_structure(tensorator(eta, xi));
      const Morphism f = s.endomorphism(n);
      const Morphism fbar = dual_morphism(d, dagger(f));
      bad += conj_structure(morphism_action(d, fbar, xi)) != morphism_action(d, f, conj_structure(xi));
    }
    return bad;
  });

  c.exact("minimality", "prop::Minimality", [&] {
    auto s = c.sampler(74);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      // End(X) is the level-1 ground relative commutant: span of the empty
      // diagram and the one-cup unit.
      const GradedElement t = Rational(s.coefficient()) * GradedElement::p(1) + s.component(GradedKey{0, 1, 1});
      const Morphism f = frobenius_preimage(d, t, 1, 1);
      bad += categorical_trace(d, f, TraceSide::left) != categorical_trace(d, f, TraceSide::right);
    }
    return bad;
  });

  c.exact("index-surrogate", "prop::normalized", [&] {
    int bad = 0;
    const GradedElement lhs = c.delta * tower_expectation(d, GradedElement::p(1), 1);
    bad += lhs != c.delta * GradedElement::p(1);
    bad += iota_preimage(lhs, 1) != c.delta * GradedElement::unit();
    // B_0 over itself: the singleton unit basis has index (1, 1).
    const CornerElement unit(CornerShape{0, 0}, GradedElement::unit());
    std::vector<CornerElement> samples;
    auto s = c.sampler(75);
    for (int i = 0; i < 5; ++i) samples.push_back(s.corner(CornerShape{0, 0}, 2, 2));
    const auto [rind, lind] = index_from_bases(d, {unit}, {unit}, samples);
    bad += rind != Rational(1);
    bad += lind != Rational(1);
    // A family that cannot reproduce must be rejected.
    try {
      index_from_bases(d, {CornerElement(CornerShape{0, 0}, GradedElement())},
                       {CornerElement(CornerShape{0, 0}, GradedElement())}, samples);
      bad += 1;
    } catch (const BasisCheckError&) {
    }
    return bad;
  });

  c.check("norm-equivalence-sandwich", "prop:basis", "float", "report", "residual", 0.35, [&](CheckRecord& rec) {
    auto s = c.sampler(76);
    const double half = std::sqrt(to_double(d));
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const CornerElement xi = s.corner(CornerShape{0, 1}, 1, 2);
      if (xi.payload().is_zero()) continue;
      const GradedElement rr = right_inner(d, xi, xi), ll = left_inner(d, xi, xi);
      const double nr = std::sqrt(moment_norm_estimates(d, rr, 0, 4, 16).back());
      const double nl = std::sqrt(moment_norm_estimates(d, ll, 0, 4, 16).back());
      if (nl == 0.0 || nr == 0.0) continue;
      const double ratio = nr / nl;
      worst = std::max({worst, ratio / half - 1.0, 1.0 / (ratio * half) - 1.0});
    }
    rec.note = "moment estimates of the two module norms against the sqrt(delta) sandwich";
    return std::max(worst, 0.0);
  });
}

}  // namespace

bool Report::all_gates_pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.policy != "gate" || r.pass; });
}

std::string Report::to_json_lines(bool include_timing) const {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& s : (config.suites.empty() ? all_suite_names() : config.suites)) suites.push_back(s);
  std::string out = nlohmann::ordered_json{{"config",
                                            {{"delta", rational_to_string(config.delta)},
                                             {"max_level", config.max_level},
                                             {"max_bottom", config.max_bottom},
                                             {"seed", config.seed},
                                             {"float_tol", config.float_tol},
                                             {"moment_p_max", config.moment_p_max},
                                             {"suites", suites}}}}
                        .dump();
  out += '\n';
  for (const auto& r : records) {
    nlohmann::ordered_json line{{"name", r.name},       {"anchor", r.anchor},
                                {"mode", r.mode},       {"policy", r.policy},
                                {"metric_kind", r.metric_kind}, {"metric", r.metric},
                                {"tol", r.tol},         {"pass", r.pass}};
    if (!r.note.empty()) line["note"] = r.note;
    if (include_timing) line["elapsed_ms"] = r.elapsed_ms;
    out += line.dump();
    out += '\n';
  }
  return out;
}

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {"category-identities", "gjs-products", "traces-positivity",
                                                 "tower",               "fock",         "bimodules"};
  return names;
}

Report run_suites(const SuiteConfig& cfg) {
  LoopParameter delta(cfg.delta);
  if (cfg.max_level < 1 || cfg.max_level > 8) throw std::invalid_argument("max_level must lie in [1, 8]");
  if (cfg.max_bottom < 4) throw std::invalid_argument("max_bottom must be at least 4");
  if (cfg.float_tol <= 0) throw std::invalid_argument("float_tol must be positive");
  if (cfg.moment_p_max < 1 || (cfg.moment_p_max & (cfg.moment_p_max - 1)) != 0)
    throw std::invalid_argument("moment_p_max must be a power of two");

  std::vector<std::string> selected = cfg.suites.empty() ? all_suite_names() : cfg.suites;
  for (const auto& name : selected) {
    if (std::find(all_suite_names().begin(), all_suite_names().end(), name) == all_suite_names().end())
      throw std::invalid_argument("unknown suite: " + name);
  }

  Report report;
  report.config = cfg;
  Ctx ctx{cfg, delta.value(), report.records};
  for (const auto& name : selected) {
    if (name == "category-identities") suite_category(ctx);
    else if (name == "gjs-products") suite_products(ctx);
    else if (name == "traces-positivity") suite_traces(ctx);
    else if (name == "tower") suite_tower(ctx);
    else if (name == "fock") suite_fock(ctx);
    else if (name == "bimodules") suite_bimodules(ctx);
  }
  return report;
}

std::vector<DimensionEntry> dimension_table(int max_n) {
  if (max_n < 0 || max_n > 10) throw std::invalid_argument("max_n must lie in [0, 10]");
  std::vector<DimensionEntry> table;
  const int bound = 2 * max_n;
  for (int b = 0; b <= bound; ++b)
    for (int l = 0; b + l <= bound; ++l)
      for (int r = 0; b + l + r <= bound; ++r) {
        const int total = b + l + r;
        table.push_back({b, l, r, total % 2 == 0 ? catalan(total / 2) : 0});
      }
  return table;
}

}  // namespace tlgjs
