#pragma once

#include <json.hpp>

#include "symtau/mpoly.hpp"

namespace symtau {

using json = nlohmann::ordered_json;

// RatFun <-> {"num": ["p/q", ...], "den": [...]}; coefficients low to high.
json to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

// MPoly <-> {"nvars": m, "terms": [{"exp": [...], "coeff": <RatFun>}, ...]}
// with terms in the canonical (graded-lex, leading first) order.
json to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

// canonical bytes used for cache files: compact dump + newline
std::string canonical_dump(const json& j);

} // namespace symtau
