#pragma once

// JSON forms of families, products and co-rank reports.
//
// Family file:
//   {"n": 2, "window": {"kMin": -1, "kMax": 4},
//    "variables": [{"monotone": "decreasing",
//                   "primes": [{"re": 0.5, "im": 0.0,
//                               "profile": {"leftTail": 2, "window": [...], "rightTail": 0}}]}],
//    "truncated": false}                       // optional
//
// Report file:
//   {"method": "general", "corank": 2, "truncatedWindow": false,
//    "tuples": [{"primes": [{"re":..,"im":..}], "zeroSet": {...}, "minimalRep": [[2,1],[1,2]],
//                "count": 2, "iSet": [0, 2]}]}   // iSet for the monotone method

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "rudin/blaschke.hpp"
#include "rudin/corank.hpp"
#include "rudin/family.hpp"

namespace rudin::io {

using nlohmann::json;

/// Throws Error(ParseError) with a "line N: ..." message.
RudinFamily parse_family(std::string_view text);
RudinFamily load_family(const std::filesystem::path& path);

json family_to_json(const RudinFamily& fam);

json product_to_json(const BlaschkeProduct& phi);
BlaschkeProduct product_from_json(const json& j);

json report_to_json(const CorankReport& report);

/// 1-based line where the value at `pointer` starts in `text`, 0 if absent.
/// `text` must be well-formed JSON.
int line_of(std::string_view text, std::string_view pointer);

}  // namespace rudin::io
