#pragma once

#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/snf.hpp"
#include "wheelzeta/univariate.hpp"

#include <json.hpp>

namespace wheelzeta {

// Shared wire encodings. Every integer is a decimal string.
//   polynomial: {"terms":[{"q":int,"t":int,"c":"decimal"}]} sorted by (q, t)
//   SNF:        {"invariant_factors":["decimal", ...]}

nlohmann::json to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SNFResult& s);
SNFResult snf_from_json(const nlohmann::json& j);

/// Ascending coefficient list of decimal strings.
nlohmann::json to_json(const IntPolynomial& p);

} // namespace wheelzeta
