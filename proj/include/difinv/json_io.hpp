#pragma once

#include <json.hpp>

#include "difinv/invariant.hpp"

namespace difinv {

using Json = nlohmann::ordered_json;

/// Lossless encodings: rationals are ["num", "den"] with decimal strings,
/// polynomials {"terms": [{"coeff": q, "vars": [["a3", 1], ["a3'", 2]]}]}.
/// Readers throw std::invalid_argument on malformed input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const DiffPoly& p);
DiffPoly poly_from_json(const Json& j);

Json to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const Json& j);

Json to_json(const PowerProduct& p);
PowerProduct power_product_from_json(const Json& j);

/// {"name", "kind", <expression fields>, "index", "weight", "order",
/// "provenance"}. Polynomials contribute "terms", rational functions
/// "num"/"den", power products "constant"/"factors".
Json to_json(const Invariant& inv);
Invariant invariant_from_json(const Json& j);

}  // namespace difinv
