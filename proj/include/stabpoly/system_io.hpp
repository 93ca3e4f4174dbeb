#pragma once

#include "stabpoly/polytope.hpp"

#include "json.hpp"

namespace stabpoly {

/// {"coeffs": ["p/q", ...], "rhs": "p/q", "kind": "facet" | "nonnegativity"}
nlohmann::json to_json(const Inequality& row);
Inequality inequality_from_json(const nlohmann::json& j);

/// {"n": int, "rows": [...]}
nlohmann::json to_json(const LinearSystem& sys);
LinearSystem system_from_json(const nlohmann::json& j);

/// Exact rational point as a JSON array of "p/q" strings.
nlohmann::json to_json(const RationalVector& x);
RationalVector vector_from_json(const nlohmann::json& j);

}  // namespace stabpoly
