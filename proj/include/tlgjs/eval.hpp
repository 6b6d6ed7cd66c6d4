#pragma once

#include <json.hpp>
#include <stdexcept>

namespace tlgjs {

// Raised on malformed expression trees; `path` locates the offending node
// ("/wedge/1/star", ...).
struct EvalError : std::invalid_argument {
  EvalError(const std::string& path, const std::string& message)
      : std::invalid_argument(message + " (at node " + path + ")"), path(path) {}
  std::string path;
};

// Evaluates a JSON expression tree over the operators
//   wedge, walker, star, trace, phi, E, En, iota,
//   inner_right, inner_left, fuse, F, dot_shift, conjugate
// with {"lit": <element json>} leaves. The loop parameter is taken from the
// literals, which must all agree. Returns either {"scalar": "p/q"} or a
// serialized element.
nlohmann::json evaluate_expression(const nlohmann::json& tree);

}  // namespace tlgjs
