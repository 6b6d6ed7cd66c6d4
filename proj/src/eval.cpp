#include "tlgjs/eval.hpp"

#include <optional>
#include <variant>

#include "tlgjs/json_io.hpp"

namespace tlgjs {

using nlohmann::json;

namespace {

using Value = std::variant<GradedElement, Rational>;

void collect_deltas(const json& node, const std::string& path, std::vector<Rational>& out) {
  if (!node.is_object()) return;
  for (const auto& [key, val] : node.items()) {
    if (key == "lit") {
      try {
        out.push_back(graded_delta_from_json(val));
      } catch (const std::invalid_argument& e) {
        throw EvalError(path + "/lit", e.what());
      }
    } else if (val.is_array()) {
      int i = 0;
      for (const auto& child : val) collect_deltas(child, path + "/" + key + "/" + std::to_string(i++), out);
    } else {
      collect_deltas(val, path + "/" + key, out);
    }
  }
}

struct Evaluator {
  Rational delta;

  GradedElement element(const json& node, const std::string& path) {
    Value v = eval(node, path);
    if (std::holds_alternative<Rational>(v)) throw EvalError(path, "expected an element, got a scalar");
    return std::get<GradedElement>(std::move(v));
  }

  // Shape of a uniform-corner element; zero elements adopt any shape.
  std::optional<CornerShape> shape_of(const GradedElement& x, const std::string& path) {
    std::optional<CornerShape> shape;
    for (const auto& [k, f] : x.terms()) {
      const CornerShape s{k.l, k.r};
      if (shape && *shape != s) throw EvalError(path, "element spans more than one corner");
      shape = s;
    }
    return shape;
  }

  CornerElement corner(const json& node, const std::string& path, std::optional<CornerShape> fallback = {}) {
    const GradedElement x = element(node, path);
    std::optional<CornerShape> shape = shape_of(x, path);
    if (!shape) shape = fallback ? fallback : std::optional<CornerShape>(CornerShape{0, 0});
    return CornerElement(*shape, x);
  }

  const json& arg(const json& args, std::size_t i, std::size_t n, const std::string& path) {
    if (!args.is_array() || args.size() != n)
      throw EvalError(path, "expected an argument array of length " + std::to_string(n));
    return args[i];
  }

  int int_arg(const json& args, std::size_t i, std::size_t n, const std::string& path) {
    const json& a = arg(args, i, n, path);
    if (!a.is_number_integer()) throw EvalError(path, "expected an integer argument");
    return a.get<int>();
  }

  Value eval(const json& node, const std::string& path) {
    if (!node.is_object() || node.size() != 1)
      throw EvalError(path, "expected an object with exactly one operator key");
    const std::string op = node.begin().key();
    const json& args = node.begin().value();
    const std::string here = path + "/" + op;
    try {
      if (op == "lit") return graded_from_json(args);
      if (op == "wedge") return wedge(delta, element(arg(args, 0, 2, here), here + "/0"), element(arg(args, 1, 2, here), here + "/1"));
      if (op == "walker") return walker(delta, element(arg(args, 0, 2, here), here + "/0"), element(arg(args, 1, 2, here), here + "/1"));
      if (op == "star") return star(element(args, here));
      if (op == "trace") return voiculescu_trace(delta, element(args, here));
      if (op == "phi") return ground_weight(delta, element(args, here));
      if (op == "E") return ground_expectation(element(args, here));
      if (op == "En") {
        const int n = int_arg(args, 1, 2, here);
        return tower_expectation(delta, element(arg(args, 0, 2, here), here + "/0"), n);
      }
      if (op == "iota") {
        const int n = int_arg(args, 1, 2, here);
        return iota(element(arg(args, 0, 2, here), here + "/0"), n);
      }
      if (op == "inner_right" || op == "inner_left") {
        CornerElement a = corner(arg(args, 0, 2, here), here + "/0");
        CornerElement b = corner(arg(args, 1, 2, here), here + "/1", a.shape());
        if (a.payload().is_zero()) a = CornerElement(b.shape(), GradedElement());
        return op == "inner_right" ? right_inner(delta, a, b) : left_inner(delta, a, b);
      }
      if (op == "fuse") {
        if (!args.is_array() || args.empty()) throw EvalError(here, "fuse needs a nonempty argument array");
        std::vector<CornerElement> word;
        int i = 0;
        for (const auto& child : args) word.push_back(corner(child, here + "/" + std::to_string(i++)));
        return fuse(word).payload();
      }
      if (op == "F") {
        const Morphism f = morphism_from_json(arg(args, 0, 2, here));
        return morphism_action(delta, f, corner(arg(args, 1, 2, here), here + "/1", CornerShape{0, f.source()}))
            .payload();
      }
      if (op == "dot_shift") {
        const int steps = int_arg(args, 1, 2, here);
        return dot_shift(corner(arg(args, 0, 2, here), here + "/0"), steps).payload();
      }
      if (op == "conjugate") {
        CornerElement x = corner(args, here);
        if (x.shape().l != 0) throw EvalError(here, "conjugate needs a (0, n) corner element");
        return conjugate(x).payload();
      }
    } catch (const EvalError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw EvalError(here, e.what());
    }
    throw EvalError(here, "unknown operator '" + op + "'");
  }
};

}  // namespace

json evaluate_expression(const json& tree) {
  std::vector<Rational> deltas;
  collect_deltas(tree, "", deltas);
  if (deltas.empty()) throw EvalError("/", "no literal carries a loop parameter");
  for (const auto& d : deltas)
    if (d != deltas.front()) throw EvalError("/", "literals carry conflicting loop parameters");
  LoopParameter checked(deltas.front());

  Evaluator ev{checked.value()};
  const Value v = ev.eval(tree, "");
  if (std::holds_alternative<Rational>(v)) return json{{"scalar", rational_to_string(std::get<Rational>(v))}};
  return graded_to_json(std::get<GradedElement>(v), ev.delta);
}

}  // namespace tlgjs
