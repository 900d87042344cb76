#include "milnor/isostruct.hpp"

#include <algorithm>

namespace milnor {

LaurentPoly characteristic_laurent(const Matrix<CycloNumber>& t) {
  return LaurentPoly::from_coeffs(characteristic_polynomial(t));
}

int milnor_signature(const SkewIsometricStructure<CycloNumber>& s, const CycloNumber& xi, const LaurentPoly& char_t) {
  if (!on_unit_circle(xi)) throw DomainError("milnor_signature: xi is not on the unit circle");
  if (xi == CycloNumber(1) || xi == CycloNumber(-1)) throw DomainError("milnor_signature: xi = +-1 is excluded");
  // over R the part at xi is also the part at conj(xi); char_t is real there
  if (!char_t.evaluate(xi).is_zero()) return 0;
  return milnor_signature(s, xi);
}

PrimaryDecomposition<CycloNumber> primary_decomposition(const SkewIsometricStructure<CycloNumber>& s,
                                                        const FactorOptions& opts) {
  PrimaryDecomposition<CycloNumber> out;
  const std::size_t n = s.dim();
  out.residual_basis = Matrix<CycloNumber>(n, 0);
  if (n == 0) return out;
  const BasicFactorization fac = factor_basic(characteristic_laurent(s.t), s.flavor, opts);
  for (const auto& [bp, mult] : fac.factors) {
    if (bp.exceptional) {
      const auto q = matrix_polynomial(std::vector<CycloNumber>{-bp.xi, CycloNumber(1)}, s.t);
      const std::size_t d = generalized_kernel(q).cols();
      (bp.xi == CycloNumber(1) ? out.dim_plus_one : out.dim_minus_one) += d;
      continue;
    }
    out.parts.push_back(primary_part(s, bp.xi));
  }
  if (fac.residual.span() > 0) {
    // the residual carries its full multiplicity, so ker r(T) is the whole generalized space
    out.residual_basis = kernel(matrix_polynomial(fac.residual.dense(), s.t));
  }
  return out;
}

PrimaryDecomposition<ApproxComplex> primary_decomposition(const SkewIsometricStructure<ApproxComplex>& s,
                                                          const std::vector<ApproxComplex>& candidates) {
  PrimaryDecomposition<ApproxComplex> out;
  const std::size_t n = s.dim();
  std::vector<ApproxComplex> seen;
  Matrix<ApproxComplex> covered(n, 0);
  for (const auto& c : candidates) {
    const ApproxComplex xi = detail::flavor_representative(c, s.flavor);
    if (std::find(seen.begin(), seen.end(), xi) != seen.end()) continue;
    seen.push_back(xi);
    const PrimaryPart<ApproxComplex> part = primary_part(s, xi);
    if (part.dim() == 0) continue;
    covered = hconcat(covered, part.basis);
    if (part.exceptional) {
      (xi == ApproxComplex(1L) ? out.dim_plus_one : out.dim_minus_one) += part.dim();
    } else {
      out.parts.push_back(part);
    }
  }
  // everything mu-orthogonal to the listed parts
  out.residual_basis = covered.cols() == 0 ? Matrix<ApproxComplex>::identity(n)
                                           : kernel(entrywise_conj(Matrix<ApproxComplex>(covered.transpose() * s.mu)));
  return out;
}

SkewIsometricStructure<ApproxComplex> to_float(const SkewIsometricStructure<CycloNumber>& s, double tolerance) {
  auto conv = [tolerance](const CycloNumber& z) { return ApproxComplex(z, tolerance); };
  return SkewIsometricStructure<ApproxComplex>{s.mu.map(conv), s.t.map(conv), s.flavor};
}

}  // namespace milnor
