#pragma once

#include <string>

#include "json.hpp"

#include "kingman/zeta_polynomial.hpp"

namespace kingman {

// {"terms":[{"coeff":"p/q","generators":["gamma","log2","zeta(3)",...]}]}
// Terms appear in canonical (sorted-monomial) order; each generator is listed
// once per power. Inverse of polynomial_from_json.
nlohmann::json polynomial_to_json(const ZetaPolynomial& p);

// Throws std::invalid_argument on malformed input.
ZetaPolynomial polynomial_from_json(const nlohmann::json& j);

Generator generator_from_name(const std::string& name);

}  // namespace kingman
