#pragma once

// JSON forms of the library's values (nlohmann::ordered_json).
//
//   CycloNumber    {"order": N, "coeffs": ["p/q", ...]}; readers also accept an
//                  integer, a "p/q" string, or {"order": N, "exponent": k} for zeta_N^k
//   LaurentPoly    {"terms": {"-1": <cyclo>, "0": <cyclo>, ...}}; readers also accept a bare scalar
//   RationalFunction {"num": <laurent>, "den": <laurent>}
//   matrices       row-major arrays of rows
//   structure      {"mu": <matrix>, "t": <matrix>, "flavor": "real" | "complex"}
//   linking form   {"presentation": <laurent matrix A>, "flavor": ...} for a Hermitian A,
//                  or {"presentation": <relations P>, "gram": <rational matrix G>, "flavor": ...},
//                  or {"elementary": [{"n": 1, "eps": 1, "xi": <root>}, ...], "flavor": ...}
//   Seifert input  {"V": [[int, ...], ...], "omega": <root>}  (omega defaults to 1)
//   fibered data   {"lambda": <matrix>, "phi": <matrix>, "flavor": ...}
//
// Readers throw ParseError naming the offending field.

#include <string>
#include <string_view>

#include "json.hpp"
#include "milnor/fibered.hpp"
#include "milnor/isostruct.hpp"
#include "milnor/linkforms.hpp"

namespace milnor {

using Json = nlohmann::ordered_json;  // keeps field order in output

/// zeta_order^exponent written "N/k".
struct RootSpec {
  int order = 1;
  long exponent = 0;
  CycloNumber value() const { return cyclo(order, exponent); }
  std::string text() const { return std::to_string(order) + "/" + std::to_string(exponent); }
  friend bool operator==(const RootSpec&, const RootSpec&) = default;
};

/// Parses "N/k" with N >= 1. Throws ParseError.
RootSpec parse_root_spec(std::string_view text);

/// Syntax errors become ParseError with "line L, column C".
Json parse_json(std::string_view text);

Json to_json(const CycloNumber& z);
Json to_json(const LaurentPoly& p);
Json to_json(const RationalFunction& f);
Json to_json(const RootSpec& r);
Json to_json(const SkewIsometricStructure<CycloNumber>& s);
Json to_json(const LinkingForm& l);
Json to_json(const FiberedData<CycloNumber>& f);

template <class T>
Json to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycloNumber cyclo_from_json(const Json& j);
/// Root of unity; accepts {"order", "exponent"} or "N/k".
RootSpec root_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
RationalFunction rational_from_json(const Json& j);
Matrix<CycloNumber> cyclo_matrix_from_json(const Json& j);
LaurentMatrix laurent_matrix_from_json(const Json& j);
RationalMatrix rational_matrix_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
Flavor flavor_from_json(const Json& j);

/// Validated structure; DomainError on invariant violations.
SkewIsometricStructure<CycloNumber> structure_from_json(const Json& j);
LinkingForm linkform_from_json(const Json& j);
FiberedData<CycloNumber> fibered_from_json(const Json& j);

struct SeifertInput {
  IntMatrix v;
  RootSpec omega;
};
SeifertInput seifert_from_json(const Json& j);

}  // namespace milnor
