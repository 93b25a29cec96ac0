#ifndef TWOBRIDGE_FORMAT_HPP
#define TWOBRIDGE_FORMAT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "twobridge/laurent.hpp"
#include "twobridge/param.hpp"

namespace twobridge {

/// "1 - 3t + 5t^2 - 3t^3 + t^4": ascending powers of t.
std::string poly_to_string(const LaurentPoly1& p);

/// "x^2 y^2 - x^2 y - x y^2 + 3 x y - x - y + 1": descending lexicographic
/// order on (i, j), the order the polynomials are conventionally printed in.
std::string poly_to_string(const LaurentPoly2& p);

/// Inverse of poly_to_string; accepts either spacing style.
LaurentPoly1 parse_poly1(const std::string& text);
LaurentPoly2 parse_poly2(const std::string& text);

/// JSON record {"p", "q", "kind", "vars", "terms"}; terms are
/// [[exponents...], coefficient] pairs in ascending lexicographic order.
/// The 1-variable form also carries "coefficient_profile".
nlohmann::json record_json(const TwoBridgeParam& param, const LaurentPoly1& poly);
nlohmann::json record_json(const TwoBridgeParam& param, const LaurentPoly2& poly);

LaurentPoly1 poly1_from_json(const nlohmann::json& record);
LaurentPoly2 poly2_from_json(const nlohmann::json& record);

/// RFC 4180: quote a field when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

/// Batch table over all valid (p, q) with q <= qmax, rows ordered by q then
/// p. Knots carry the 1-variable polynomial, links the 2-variable one.
/// CSV header: "p,q,kind,polynomial".
std::string table_csv(Int qmax, bool links_only, bool knots_only);
nlohmann::json table_json(Int qmax, bool links_only, bool knots_only);

} // namespace twobridge

#endif
