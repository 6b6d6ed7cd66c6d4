#include "tlgjs/json_io.hpp"

#include <algorithm>

namespace tlgjs {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw std::invalid_argument(std::string("missing or non-integer field '") + field + "'");
  return j[field].get<int>();
}

const json& require(const json& j, const char* field) {
  if (!j.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
  return j[field];
}

}  // namespace

json pairing_to_json(const PlanarPairing& p, int l, int r) {
  if (l + r != p.top()) throw std::invalid_argument("top split does not match pairing");
  json pairs = json::array();
  for (int i = 0; i < p.points(); ++i) {
    const int j = p.partner(i);
    if (i < j) pairs.push_back(json::array({i + 1, j + 1}));
  }
  return json{{"b", p.bottom()}, {"l", l}, {"r", r}, {"match", pairs}};
}

PlanarPairing pairing_from_json(const json& j) {
  const int b = require_int(j, "b"), l = require_int(j, "l"), r = require_int(j, "r");
  const json& pairs = require(j, "match");
  if (!pairs.is_array()) throw std::invalid_argument("'match' must be an array of pairs");
  const int points = b + l + r;
  std::vector<int> match(points, -1);
  for (const auto& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("each match entry must be a pair [i, j]");
    const int i = pr[0].get<int>() - 1, k = pr[1].get<int>() - 1;
    if (i < 0 || k < 0 || i >= points || k >= points || match[i] != -1 || match[k] != -1)
      throw std::invalid_argument("match entry out of range or duplicated");
    match[i] = k;
    match[k] = i;
  }
  return PlanarPairing(b, l + r, std::move(match));
}

json morphism_to_json(const Morphism& f) {
  json terms = json::array();
  for (const auto& [p, c] : f.terms())
    terms.push_back(json{{"pairing", pairing_to_json(p)}, {"coeff", rational_to_string(c)}});
  return json{{"source", f.source()}, {"target", f.target()}, {"terms", terms}};
}

Morphism morphism_from_json(const json& j) {
  Morphism f(require_int(j, "source"), require_int(j, "target"));
  for (const auto& t : require(j, "terms")) {
    const PlanarPairing p = pairing_from_json(require(t, "pairing"));
    f.add_term(p, parse_rational(require(t, "coeff").get<std::string>()));
  }
  return f;
}

json graded_to_json(const GradedElement& x, const Rational& delta) {
  json terms = json::array();
  for (const auto& [k, f] : x.terms()) {
    json term{{"b", k.b}, {"l", k.l}, {"r", k.r}};
    json fterms = json::array();
    for (const auto& [p, c] : f.terms())
      fterms.push_back(json{{"pairing", pairing_to_json(p, k.l, k.r)}, {"coeff", rational_to_string(c)}});
    term["morphism"] = json{{"source", f.source()}, {"target", f.target()}, {"terms", fterms}};
    terms.push_back(std::move(term));
  }
  return json{{"delta", rational_to_string(delta)}, {"terms", terms}};
}

GradedElement graded_from_json(const json& j) {
  GradedElement x;
  for (const auto& t : require(j, "terms")) {
    const GradedKey key{require_int(t, "b"), require_int(t, "l"), require_int(t, "r")};
    x.add(key, morphism_from_json(require(t, "morphism")));
  }
  return x;
}

Rational graded_delta_from_json(const json& j) {
  return parse_rational(require(j, "delta").get<std::string>());
}

json corner_to_json(const CornerElement& x, const Rational& delta) {
  json out = graded_to_json(x.payload(), delta);
  out["shape"] = json::array({x.shape().l, x.shape().r});
  return out;
}

CornerElement corner_from_json(const json& j) {
  const json& s = require(j, "shape");
  if (!s.is_array() || s.size() != 2) throw std::invalid_argument("'shape' must be [l, r]");
  return CornerElement(CornerShape{s[0].get<int>(), s[1].get<int>()}, graded_from_json(j));
}

json fock_to_json(const FockVector& v, const Rational& delta) {
  json sectors = json::object();
  for (const auto& [b, x] : v.sectors()) sectors[std::to_string(b)] = graded_to_json(x, delta);
  return json{{"depth", v.depth()}, {"sectors", sectors}, {"truncated", v.truncated()}};
}

FockVector fock_from_json(const json& j) {
  FockVector v(require_int(j, "depth"));
  for (const auto& [key, val] : require(j, "sectors").items()) {
    v.add_sector(std::stoi(key), graded_from_json(val));
  }
  if (j.contains("truncated") && j["truncated"].get<bool>()) v.mark_truncated();
  return v;
}

}  // namespace tlgjs
