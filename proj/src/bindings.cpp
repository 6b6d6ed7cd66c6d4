#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tlgjs/eval.hpp"
#include "tlgjs/fock.hpp"
#include "tlgjs/gns.hpp"
#include "tlgjs/json_io.hpp"
#include "tlgjs/verify.hpp"

namespace py = pybind11;
using namespace tlgjs;

namespace {

// Rationals cross the boundary as "p/q" strings; JSON payloads as strings.
Rational rat(const std::string& s) { return parse_rational(s); }

std::string eval_expression_str(const std::string& tree) {
  return evaluate_expression(nlohmann::json::parse(tree)).dump();
}

SuiteConfig config_from_kwargs(const std::string& delta, int max_level, int max_bottom, std::uint64_t seed,
                               const std::vector<std::string>& suites) {
  SuiteConfig cfg;
  cfg.delta = rat(delta);
  cfg.max_level = max_level;
  cfg.max_bottom = max_bottom;
  cfg.seed = seed;
  cfg.suites = suites;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact planar diagram calculus: graded algebras, corners, Fock module and bimodules "
            "over a rational loop parameter";

  py::register_exception<BottomBudgetError>(m, "BottomBudgetError", PyExc_RuntimeError);
  py::register_exception<BasisCheckError>(m, "BasisCheckError", PyExc_ValueError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_ValueError);

  py::class_<PlanarPairing>(m, "PlanarPairing")
      .def(py::init<int, int, std::vector<int>>(), py::arg("bottom"), py::arg("top"), py::arg("match"))
      .def_static("identity", &PlanarPairing::identity)
      .def_static("rainbow_cap", &PlanarPairing::rainbow_cap)
      .def_static("rainbow_cup", &PlanarPairing::rainbow_cup)
      .def_property_readonly("bottom", &PlanarPairing::bottom)
      .def_property_readonly("top", &PlanarPairing::top)
      .def("partner", &PlanarPairing::partner)
      .def("__eq__", [](const PlanarPairing& a, const PlanarPairing& b) { return a == b; })
      .def("__repr__", [](const PlanarPairing& p) { return pairing_to_json(p).dump(); });

  py::class_<Morphism>(m, "Morphism")
      .def_static("identity", &Morphism::identity)
      .def_static("ev", &Morphism::ev)
      .def_static("coev", &Morphism::coev)
      .def_static(
          "single", [](const PlanarPairing& p, const std::string& coeff) { return Morphism::single(p, rat(coeff)); },
          py::arg("pairing"), py::arg("coeff") = "1")
      .def_static("from_json", [](const std::string& s) { return morphism_from_json(nlohmann::json::parse(s)); })
      .def_property_readonly("source", &Morphism::source)
      .def_property_readonly("target", &Morphism::target)
      .def("to_json", [](const Morphism& f) { return morphism_to_json(f).dump(); })
      .def("__eq__", [](const Morphism& a, const Morphism& b) { return a == b; })
      .def("__add__", [](const Morphism& a, const Morphism& b) { return a + b; })
      .def("__sub__", [](const Morphism& a, const Morphism& b) { return a - b; })
      .def("scaled", [](const Morphism& f, const std::string& c) { return rat(c) * f; })
      .def("__repr__", [](const Morphism& f) { return morphism_to_json(f).dump(); });

  py::class_<GradedElement>(m, "GradedElement")
      .def_static("unit", &GradedElement::unit)
      .def_static("p", &GradedElement::p)
      .def_static("term",
                  [](int b, int l, int r, const Morphism& f) { return GradedElement::term(GradedKey{b, l, r}, f); })
      .def_static("from_json", [](const std::string& s) { return graded_from_json(nlohmann::json::parse(s)); })
      .def("to_json",
           [](const GradedElement& x, const std::string& delta) { return graded_to_json(x, rat(delta)).dump(); })
      .def("is_zero", &GradedElement::is_zero)
      .def("in_corner", &GradedElement::in_corner)
      .def("__eq__", [](const GradedElement& a, const GradedElement& b) { return a == b; })
      .def("__add__", [](const GradedElement& a, const GradedElement& b) { return a + b; })
      .def("__sub__", [](const GradedElement& a, const GradedElement& b) { return a - b; })
      .def("scaled", [](const GradedElement& x, const std::string& c) { return rat(c) * x; });

  py::class_<FockVector>(m, "FockVector")
      .def(py::init<int>(), py::arg("depth") = 6)
      .def_static("vacuum", &FockVector::vacuum, py::arg("depth") = 6)
      .def_static("from_json", [](const std::string& s) { return fock_from_json(nlohmann::json::parse(s)); })
      .def("to_json",
           [](const FockVector& v, const std::string& delta) { return fock_to_json(v, rat(delta)).dump(); })
      .def_property_readonly("depth", &FockVector::depth)
      .def_property_readonly("truncated", &FockVector::truncated)
      .def("sector", &FockVector::sector)
      .def("add_sector", &FockVector::add_sector)
      .def("__eq__", [](const FockVector& a, const FockVector& b) { return a == b; });

  // Kernel layer
  m.def("enumerate_nc_pairings", [](int points) { return enumerate_nc_pairings(points); });
  m.def("enumerate_nc_pairings_shaped",
        [](int bottom, int top) { return enumerate_nc_pairings(bottom, top); });
  m.def("catalan", &catalan);

  // Category layer
  m.def("compose", [](const std::string& d, const Morphism& g, const Morphism& f) { return compose(rat(d), g, f); });
  m.def("tensor", &tensor);
  m.def("dagger", &dagger);
  m.def("categorical_trace", [](const std::string& d, const Morphism& f, const std::string& side) {
    return rational_to_string(categorical_trace(rat(d), f, side == "left" ? TraceSide::left : TraceSide::right));
  });
  m.def("dual_morphism", [](const std::string& d, const Morphism& f) { return dual_morphism(rat(d), f); });
  m.def("operator_norm", [](const std::string& d, const Morphism& f, int level) {
    return operator_norm(rat(d), f, level);
  });

  // Graded layer
  m.def("wedge", [](const std::string& d, const GradedElement& x, const GradedElement& y) {
    return wedge(rat(d), x, y);
  });
  m.def("walker", [](const std::string& d, const GradedElement& x, const GradedElement& y) {
    return walker(rat(d), x, y);
  });
  m.def("star", &star);
  m.def("voiculescu_trace", [](const std::string& d, const GradedElement& x) {
    return rational_to_string(voiculescu_trace(rat(d), x));
  });
  m.def("normalized_trace", [](const std::string& d, const GradedElement& x, int n) {
    return rational_to_string(normalized_trace(rat(d), x, n));
  });
  m.def("ground_weight", [](const std::string& d, const GradedElement& x) {
    return rational_to_string(ground_weight(rat(d), x));
  });
  m.def("ground_expectation", &ground_expectation);
  m.def("tower_expectation", [](const std::string& d, const GradedElement& x, int n) {
    return tower_expectation(rat(d), x, n);
  });
  m.def("iota", &iota);
  m.def("iota_preimage", &iota_preimage);
  m.def("level_embedding", [](const std::string& d, const GradedElement& x, int m_) {
    return level_embedding(rat(d), x, m_);
  });
  m.def("frobenius", &frobenius);
  m.def("frobenius_preimage", [](const std::string& d, const GradedElement& x, int l, int r) {
    return frobenius_preimage(rat(d), x, l, r);
  });
  m.def("moment_norm_estimates",
        [](const std::string& d, const GradedElement& a, int n, int p_max, int budget) {
          return moment_norm_estimates(rat(d), a, n, p_max, budget);
        },
        py::arg("delta"), py::arg("element"), py::arg("corner"), py::arg("p_max"), py::arg("bottom_budget") = 24);
  m.def("ground_operator_norm", [](const std::string& d, const GradedElement& a, int level) {
    return GroundAlgebraGns(rat(d), level).operator_norm(a);
  });

  // Fock layer
  m.def("identify_sectors", [](const std::string& d, const GradedElement& x, const GradedElement& y) {
    return identify_sectors(rat(d), x, y);
  });
  m.def("module_inner", [](const std::string& d, const GradedElement& x, const GradedElement& y) {
    return module_inner(rat(d), x, y);
  });
  m.def("create", [](const std::string& d, const GradedElement& sym, const FockVector& v) {
    return create(rat(d), CreationSymbol(sym), v);
  });
  m.def("annihilate", [](const std::string& d, const GradedElement& sym, const FockVector& v) {
    return annihilate(rat(d), CreationSymbol(sym), v);
  });
  m.def("fock_inner", [](const std::string& d, const FockVector& v, const FockVector& w) {
    return rational_to_string(fock_inner(rat(d), v, w));
  });

  // Bimodule layer; corner elements travel as (payload, l, r).
  m.def("corner_act", [](const std::string& d, const GradedElement& b, const GradedElement& xi, int l, int r,
                         const GradedElement& bp) {
    return act(rat(d), b, CornerElement(CornerShape{l, r}, xi), bp).payload();
  });
  m.def("right_inner", [](const std::string& d, const GradedElement& xi, const GradedElement& eta, int l, int r) {
    return right_inner(rat(d), CornerElement(CornerShape{l, r}, xi), CornerElement(CornerShape{l, r}, eta));
  });
  m.def("left_inner", [](const std::string& d, const GradedElement& xi, const GradedElement& eta, int l, int r) {
    return left_inner(rat(d), CornerElement(CornerShape{l, r}, xi), CornerElement(CornerShape{l, r}, eta));
  });
  m.def("dot_shift", [](const GradedElement& xi, int l, int r, int steps) {
    return dot_shift(CornerElement(CornerShape{l, r}, xi), steps).payload();
  });
  m.def("conjugate", [](const GradedElement& xi, int n) {
    return conjugate(CornerElement(CornerShape{0, n}, xi)).payload();
  });
  m.def("tensorator", [](const GradedElement& xi, int n, const GradedElement& eta, int m_) {
    return tensorator(CornerElement(CornerShape{0, n}, xi), CornerElement(CornerShape{0, m_}, eta)).payload();
  });
  m.def("morphism_action", [](const std::string& d, const Morphism& f, const GradedElement& xi) {
    return morphism_action(rat(d), f, CornerElement(CornerShape{0, f.source()}, xi)).payload();
  });
  m.def("l2_inner", [](const std::string& d, const GradedElement& xi, const GradedElement& eta, int l, int r) {
    return rational_to_string(
        l2_inner(rat(d), CornerElement(CornerShape{l, r}, xi), CornerElement(CornerShape{l, r}, eta)));
  });

  // Verification layer
  m.def("run_suites",
        [](const std::string& delta, int max_level, int max_bottom, std::uint64_t seed,
           const std::vector<std::string>& suites, bool include_timing) {
          const Report report = run_suites(config_from_kwargs(delta, max_level, max_bottom, seed, suites));
          return py::make_tuple(report.all_gates_pass(), report.to_json_lines(include_timing));
        },
        py::arg("delta") = "5/2", py::arg("max_level") = 5, py::arg("max_bottom") = 24, py::arg("seed") = 42,
        py::arg("suites") = std::vector<std::string>{}, py::arg("include_timing") = true);
  m.def("suite_names", [] { return all_suite_names(); });
  m.def("dimension_table", [](int max_n) {
    py::list out;
    for (const auto& e : dimension_table(max_n)) out.append(py::make_tuple(e.b, e.l, e.r, e.dim));
    return out;
  });
  m.def("evaluate_expression", &eval_expression_str);
}
