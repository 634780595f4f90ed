#pragma once

#include <dlk/dlclass.hpp>
#include <dlk/flagring.hpp>
#include <dlk/poly.hpp>

#include <json.hpp>

#include <string>

namespace dlk {

using Json = nlohmann::json;

// Term schema: {"beta": k, "x": [...], "y": [...], "coeff": "<decimal>"},
// terms in canonical order.
Json to_json(const BetaPolynomial& p);
// Throws std::invalid_argument on malformed input.
BetaPolynomial polynomial_from_json(const Json& j);

Json to_json(const FlagRingElement& a);
FlagRingElement flag_element_from_json(const Json& j);

// {"n": n, "terms": [{"w": "[...]", "coeff": [{"beta": k, "value": "<decimal>"}]}]}
Json to_json(const SchubertExpansion& e);
SchubertExpansion expansion_from_json(const Json& j);

Json to_json(const DLResult& r);

std::string to_latex(const BetaPolynomial& p);
std::string to_plain(const BetaPolynomial& p);

// One line per permutation: "[2,1]: 3".
std::string expansion_to_plain(const SchubertExpansion& e);
// sum of c_w [\Omega_{w}].
std::string expansion_to_latex(const SchubertExpansion& e);

}  // namespace dlk
