#include "milnor/fibered.hpp"

namespace milnor {

namespace {

LaurentMatrix laurent_of(const IntMatrix& v) {
  return v.map([](long x) { return LaurentPoly(x); });
}

void check_circle(const CycloNumber& omega, const char* op) {
  if (!on_unit_circle(omega)) throw DomainError(std::string(op) + ": omega is not on the unit circle");
}

}  // namespace

Matrix<CycloNumber> seifert_matrix(const IntMatrix& v) {
  if (!v.square()) throw DomainError("Seifert matrix must be square");
  if (v.rows() % 2 != 0) throw DomainError("Seifert matrix must have even size");
  return v.map([](long x) { return CycloNumber(x); });
}

FiberedData<CycloNumber> from_seifert(const IntMatrix& v_int, const CycloNumber& omega) {
  check_circle(omega, "from_seifert");
  const Matrix<CycloNumber> v = seifert_matrix(v_int);
  if (rank(v) != v.rows()) throw DomainError("from_seifert: Seifert matrix is singular (not a fibered input)");
  const Flavor flavor = (omega == CycloNumber(1) || omega == CycloNumber(-1)) ? Flavor::Real : Flavor::Complex;
  Matrix<CycloNumber> phi = omega * (inverse(v) * v.transpose());
  return FiberedData<CycloNumber>::make(v - v.transpose(), std::move(phi), flavor);
}

int levine_tristram(const IntMatrix& v_int, const CycloNumber& omega) {
  check_circle(omega, "levine_tristram");
  if (omega == CycloNumber(1)) throw DomainError("levine_tristram: omega = 1 gives the zero matrix");
  const Matrix<CycloNumber> v = seifert_matrix(v_int);
  if (v.rows() == 0) return 0;
  const CycloNumber one(1);
  return signature(Matrix<CycloNumber>((one - omega) * v + (one - conj(omega)) * v.transpose())).signature();
}

LaurentPoly alexander_polynomial(const IntMatrix& v_int) {
  (void)seifert_matrix(v_int);
  const LaurentMatrix v = laurent_of(v_int);
  return determinant(LaurentMatrix(LaurentPoly::t(1) * v.transpose() - v));
}

std::vector<CycloNumber> alexander_circle_roots(const IntMatrix& v) {
  const LaurentPoly delta = alexander_polynomial(v);
  std::vector<CycloNumber> roots;
  if (delta.is_zero()) throw DomainError("alexander_circle_roots: Alexander polynomial vanishes");
  for (const auto& [p, mult] : factor_basic(delta, Flavor::Real).factors)
    if (!p.exceptional) roots.push_back(p.xi);
  return roots;
}

LinkingForm blanchfield_from_seifert(const IntMatrix& v_int, const BlanchfieldOptions& opts) {
  const Matrix<CycloNumber> v_c = seifert_matrix(v_int);
  if (rank(v_c) != v_c.rows()) throw DomainError("blanchfield_from_seifert: Seifert matrix is singular");
  const LaurentMatrix v = laurent_of(v_int);
  const LaurentPoly t = LaurentPoly::t(1);
  const LaurentMatrix relations = t * v.transpose() - v;
  RationalMatrix gram = rational_inverse(LaurentMatrix(t * v - v.transpose()));
  const RationalFunction scale(LaurentPoly(1L) - t);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) gram(i, j) = scale * gram(i, j);
  LinkingForm l = LinkingForm::make(relations, std::move(gram), Flavor::Real);
  if (opts.cross_check) {
    const BlanchfieldComparison c = compare_blanchfield(v_int);
    if (!c.consistent) {
      throw ConsistencyError("blanchfield_from_seifert: chi-pushforward disagrees with the fibered structure");
    }
  }
  return l;
}

BlanchfieldComparison compare_blanchfield(const IntMatrix& v, std::optional<std::vector<CycloNumber>> points) {
  BlanchfieldComparison c;
  c.points = points ? std::move(*points) : alexander_circle_roots(v);
  const LinkingForm bl = blanchfield_from_seifert(v, BlanchfieldOptions{false});
  const SkewIsometricStructure<CycloNumber> pushed = chi_pushforward(bl);
  const SkewIsometricStructure<CycloNumber> fibered = milnor_structure(from_seifert(v, CycloNumber(1)));
  const LaurentPoly char_pushed = characteristic_laurent(pushed.t);
  const LaurentPoly char_fibered = characteristic_laurent(fibered.t);
  for (const auto& xi : c.points) {
    const int a = milnor_signature(pushed, xi, char_pushed);
    const int b = milnor_signature(fibered, xi, char_fibered);
    c.blanchfield.push_back(a);
    c.fibered.push_back(b);
    if (a == 0 && b == 0) continue;
    if (a != b && a != -b) {
      c.consistent = false;
      continue;
    }
    const int s = a == b ? 1 : -1;
    if (c.sign && *c.sign != s) c.consistent = false;
    c.sign = s;
  }
  return c;
}

}  // namespace milnor
