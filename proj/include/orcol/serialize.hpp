#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orcol/census.hpp"
#include "orcol/criteria.hpp"
#include "orcol/field.hpp"
#include "orcol/polynomial.hpp"

namespace orcol {

using nlohmann::json;

/// "(1,0,2)"
std::string format_tuple(const std::vector<std::uint32_t>& v);

// Text renderings. Rows are in lexicographic class/exponent order and every
// line ends with '\n'.
std::string to_text(const ClassTable& t);
/// One "coef * x1^e1 ... xn^en" line per term; "0" for the zero polynomial.
std::string to_text(const Polynomial& p);
std::string to_text(const Verdict& v);
std::string to_text(const LProfile& p);
std::string to_text(const CrossCheckReport& r);
/// Modulus, element list, color set for k (when given), and the addition
/// and multiplication tables by element index for q <= 16.
std::string field_text(const FieldRef& f, std::optional<std::uint32_t> k);

json to_json(const ClassTable& t);
/// Array of {"exponents": [...], "coefficient": c}.
json to_json(const Polynomial& p);
json to_json(const ReducedPolynomial& p);
json to_json(const Witness& w);
json to_json(const Verdict& v);
json to_json(const LProfile& p);
json to_json(const CrossCheckReport& r);
json field_json(const FieldRef& f, std::optional<std::uint32_t> k);

/// Inverses of the JSON dumps above; throw std::invalid_argument on bad shape.
ClassTable class_table_from_json(const json& j);
Polynomial polynomial_from_json(const json& j, std::size_t variables);
ReducedPolynomial reduced_polynomial_from_json(const json& j);

}  // namespace orcol
