#pragma once

#include <json.hpp>

#include "gtqd/cyclo.hpp"
#include "gtqd/qdouble.hpp"

namespace gtqd {

/* Rationals serialize as [num, den]; each side is a JSON integer when it
 * fits in 64 bits and a decimal string otherwise. */
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/* {"order": m, "coeffs": [[num, den], ...]} with one entry per basis
 * coefficient (deg Phi_m of them, ascending powers of zeta_m) */
nlohmann::json cyclotomic_to_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

/* Sparse multiplication table of the double for cross-checking against
 * other implementations: {"schema": "gtqd/1", "dimension": d,
 * "basis": [names...], "triples": [[i, j, k, value], ...]} listing every
 * nonzero product e_i e_j = value * e_k (each product has at most one term). */
nlohmann::json structure_constants_json(const GTQD& D);

}  // namespace gtqd
