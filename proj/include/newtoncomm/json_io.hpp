#pragma once

#include "newtoncomm/derivation.hpp"

#include <json.hpp>

namespace newtoncomm {

/// "num/den", also for integers.
nlohmann::json rational_json(const Rational& r);
nlohmann::json rationals_json(const std::vector<Rational>& rs);

/// {"ring": {"t": t}, "dx": "<expr>", "dy": "<expr>"}.
nlohmann::json derivation_json(const PlanarDerivation& d);
nlohmann::json derivation_json(const LaurentDerivation& d);

/// Reads the encoding above. The planar reader requires t = 1 and polynomial
/// expressions (RingMismatch otherwise); malformed documents raise InvalidInput.
PlanarDerivation planar_derivation_from_json(const nlohmann::json& j);
LaurentDerivation laurent_derivation_from_json(const nlohmann::json& j);

} // namespace newtoncomm
