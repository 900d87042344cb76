#include "milnor/json_io.hpp"

#include <charconv>

namespace milnor {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

long parse_long(std::string_view s, const std::string& where) {
  long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) fail(where, "invalid integer '" + std::string(s) + "'");
  return v;
}

long as_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational \"p/q\" or an integer");
}

template <class T, class F>
Matrix<T> matrix_from(const Json& j, F&& entry, const std::string& what) {
  if (!j.is_array()) fail(what, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Matrix<T> m(rows, cols, T(0L));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string at = what + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(at, "expected a row array");
    if (j[i].size() != cols) fail(at, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry(j[i][c], at + "[" + std::to_string(c) + "]");
  }
  return m;
}

CycloNumber cyclo_at(const Json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_string()) return CycloNumber(as_rational(j, where));
  if (!j.is_object()) fail(where, "expected a cyclotomic number");
  const long order = as_long(field(j, "order", where), where + ".order");
  if (order < 1 || order > 1'000'000) fail(where + ".order", "order must be a positive integer");
  if (j.contains("exponent")) return cyclo(static_cast<int>(order), as_long(j["exponent"], where + ".exponent"));
  const Json& cs = field(j, "coeffs", where);
  if (!cs.is_array()) fail(where + ".coeffs", "expected an array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < cs.size(); ++i) coeffs.push_back(as_rational(cs[i], where + ".coeffs[" + std::to_string(i) + "]"));
  try {
    return CycloNumber(static_cast<int>(order), std::move(coeffs));
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

LaurentPoly laurent_at(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("terms")) return LaurentPoly(cyclo_at(j, where));
  const Json& terms = j["terms"];
  if (!terms.is_object()) fail(where + ".terms", "expected an object keyed by degree");
  LaurentPoly p;
  for (const auto& [key, value] : terms.items()) {
    const long d = parse_long(key, where + ".terms");
    if (d < -100000 || d > 100000) fail(where + ".terms", "degree out of range");
    p += LaurentPoly::monomial(cyclo_at(value, where + ".terms." + key), static_cast<int>(d));
  }
  return p;
}

RationalFunction rational_at(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("num")) return RationalFunction(laurent_at(j, where));
  const LaurentPoly num = laurent_at(j["num"], where + ".num");
  const LaurentPoly den = j.contains("den") ? laurent_at(j["den"], where + ".den") : LaurentPoly(1L);
  if (den.is_zero()) fail(where + ".den", "zero denominator");
  return RationalFunction(num, den);
}

Flavor flavor_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected \"real\" or \"complex\"");
  try {
    return parse_flavor(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

RootSpec root_at(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_root_spec(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  const long order = as_long(field(j, "order", where), where + ".order");
  if (order < 1 || order > 1'000'000) fail(where + ".order", "order must be a positive integer");
  return RootSpec{static_cast<int>(order), as_long(field(j, "exponent", where), where + ".exponent")};
}

}  // namespace

RootSpec parse_root_spec(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("root spec '" + std::string(text) + "' must be N/k");
  const std::string where = "root spec '" + std::string(text) + "'";
  const long n = parse_long(text.substr(0, slash), where);
  const long k = parse_long(text.substr(slash + 1), where);
  if (n < 1 || n > 1'000'000) throw ParseError(where + ": N must be a positive integer");
  return RootSpec{static_cast<int>(n), k};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto colon = msg.find("syntax error");
    if (colon != std::string::npos) msg = msg.substr(colon);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     msg);
  }
}

Json to_json(const CycloNumber& z) {
  Json coeffs = Json::array();
  for (const Rational& c : z.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"order", z.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::object();
  for (const auto& [d, c] : p.terms()) terms[std::to_string(d)] = to_json(c);
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

Json to_json(const RootSpec& r) { return Json{{"order", r.order}, {"exponent", r.exponent}}; }

Json to_json(const SkewIsometricStructure<CycloNumber>& s) {
  return Json{{"mu", to_json(s.mu)}, {"t", to_json(s.t)}, {"flavor", to_string(s.flavor)}};
}

Json to_json(const LinkingForm& l) {
  return Json{{"presentation", to_json(l.relations)}, {"gram", to_json(l.gram)}, {"flavor", to_string(l.flavor)}};
}

Json to_json(const FiberedData<CycloNumber>& f) {
  return Json{{"lambda", to_json(f.lambda.entries)}, {"phi", to_json(f.phi)}, {"flavor", to_string(f.flavor)}};
}

CycloNumber cyclo_from_json(const Json& j) { return cyclo_at(j, "cyclo"); }
RootSpec root_from_json(const Json& j) { return root_at(j, "root"); }
LaurentPoly laurent_from_json(const Json& j) { return laurent_at(j, "laurent"); }
RationalFunction rational_from_json(const Json& j) { return rational_at(j, "rational"); }
Flavor flavor_from_json(const Json& j) { return flavor_at(j, "flavor"); }

Matrix<CycloNumber> cyclo_matrix_from_json(const Json& j) {
  return matrix_from<CycloNumber>(j, cyclo_at, "matrix");
}

LaurentMatrix laurent_matrix_from_json(const Json& j) { return matrix_from<LaurentPoly>(j, laurent_at, "matrix"); }

RationalMatrix rational_matrix_from_json(const Json& j) {
  return matrix_from<RationalFunction>(j, rational_at, "matrix");
}

IntMatrix int_matrix_from_json(const Json& j) { return matrix_from<long>(j, as_long, "matrix"); }

SkewIsometricStructure<CycloNumber> structure_from_json(const Json& j) {
  auto mu = matrix_from<CycloNumber>(field(j, "mu", "structure"), cyclo_at, "structure.mu");
  auto t = matrix_from<CycloNumber>(field(j, "t", "structure"), cyclo_at, "structure.t");
  const Flavor flavor = flavor_at(field(j, "flavor", "structure"), "structure.flavor");
  return SkewIsometricStructure<CycloNumber>::make(std::move(mu), std::move(t), flavor);
}

LinkingForm linkform_from_json(const Json& j) {
  const Flavor flavor = flavor_at(field(j, "flavor", "linking form"), "linking form.flavor");
  if (j.contains("elementary")) {
    const Json& blocks = j["elementary"];
    if (!blocks.is_array() || blocks.empty()) fail("linking form.elementary", "expected a nonempty array");
    std::optional<LinkingForm> sum;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string at = "linking form.elementary[" + std::to_string(i) + "]";
      const long n = as_long(field(blocks[i], "n", at), at + ".n");
      const long eps = blocks[i].contains("eps") ? as_long(blocks[i]["eps"], at + ".eps") : 1;
      const RootSpec xi = root_at(field(blocks[i], "xi", at), at + ".xi");
      if (n < 1 || n > 64) fail(at + ".n", "n must lie in 1..64");
      LinkingForm e = elementary_linking(static_cast<int>(n), static_cast<int>(eps), xi.value(), flavor);
      sum = sum ? direct_sum(*sum, e) : std::move(e);
    }
    return *sum;
  }
  LaurentMatrix p = matrix_from<LaurentPoly>(field(j, "presentation", "linking form"), laurent_at,
                                             "linking form.presentation");
  if (!j.contains("gram")) return LinkingForm::from_hermitian(p, flavor);
  RationalMatrix g = matrix_from<RationalFunction>(j["gram"], rational_at, "linking form.gram");
  return LinkingForm::make(std::move(p), std::move(g), flavor);
}

FiberedData<CycloNumber> fibered_from_json(const Json& j) {
  auto lambda = matrix_from<CycloNumber>(field(j, "lambda", "fibered"), cyclo_at, "fibered.lambda");
  auto phi = matrix_from<CycloNumber>(field(j, "phi", "fibered"), cyclo_at, "fibered.phi");
  const Flavor flavor = flavor_at(field(j, "flavor", "fibered"), "fibered.flavor");
  return FiberedData<CycloNumber>::make(std::move(lambda), std::move(phi), flavor);
}

SeifertInput seifert_from_json(const Json& j) {
  SeifertInput in;
  in.v = matrix_from<long>(field(j, "V", "seifert"), as_long, "seifert.V");
  in.omega = j.contains("omega") ? root_at(j["omega"], "seifert.omega") : RootSpec{1, 0};
  return in;
}

}  // namespace milnor
