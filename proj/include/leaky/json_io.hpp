#pragma once

#include "json.hpp"
#include "leaky/chambers.hpp"
#include "leaky/cover.hpp"
#include "leaky/poly.hpp"
#include "leaky/rational.hpp"

namespace leaky {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// {"expanded":..., "factored":..., "degree":d, "terms":[{"exponents":[[i,e],..],"coefficient":"p/q"},..]}
Json to_json(const Poly& p);
Json to_json(const CoverGraph& c);
Json to_json(const WeightedCover& wc);
Json to_json(const Wall& w, std::int64_t k);

/// Inverse of to_json(CoverGraph). Integer weights may be JSON numbers or
/// strings; any other string is read as a LinForm.
CoverGraph cover_from_json(const Json& j);

}  // namespace leaky
