#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"

#include "sylvsum/double_sum.hpp"
#include "sylvsum/poly.hpp"
#include "sylvsum/verify.hpp"

namespace sylvsum {

using Json = nlohmann::ordered_json;

/// Ascending array of rational strings, e.g. ["2","-3","1"]; [] for zero.
Json to_json(const Poly& poly);
Json to_json(const RootList& roots);
/// {"identity", "m", "n", "p", "q", "k", "trial", "status"} plus
/// "lhs", "rhs", "A", "B" when the check failed.
Json to_json(const CheckReport& report);

/// Throws ParseError for anything other than an array of rational strings.
/// Trailing zero coefficients are stripped.
Poly poly_from_json(const Json& json);
/// Throws ParseError, or DuplicateRoots for repeated values.
RootList rootlist_from_json(const Json& json);

/// Splits "1,-3/2,4" into rationals. Throws ParseError.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace sylvsum
