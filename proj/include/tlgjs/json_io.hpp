#pragma once

#include <json.hpp>

#include "tlgjs/bimodule.hpp"
#include "tlgjs/fock.hpp"
#include "tlgjs/graded.hpp"

namespace tlgjs {

// JSON encodings of the public value types. Pairings use 1-based point
// indices with pairs sorted by their smaller endpoint; rationals are "p/q"
// strings. All decoders validate and throw std::invalid_argument with the
// offending context.

nlohmann::json pairing_to_json(const PlanarPairing& p, int l, int r);
inline nlohmann::json pairing_to_json(const PlanarPairing& p) { return pairing_to_json(p, p.top(), 0); }
PlanarPairing pairing_from_json(const nlohmann::json& j);

nlohmann::json morphism_to_json(const Morphism& f);
Morphism morphism_from_json(const nlohmann::json& j);

nlohmann::json graded_to_json(const GradedElement& x, const Rational& delta);
GradedElement graded_from_json(const nlohmann::json& j);
// Reads the "delta" field of a serialized element.
Rational graded_delta_from_json(const nlohmann::json& j);

nlohmann::json corner_to_json(const CornerElement& x, const Rational& delta);
CornerElement corner_from_json(const nlohmann::json& j);

nlohmann::json fock_to_json(const FockVector& v, const Rational& delta);
FockVector fock_from_json(const nlohmann::json& j);

}  // namespace tlgjs
