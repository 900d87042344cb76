#pragma once

// Skew-isometric structures (H, mu, t): a nonsingular skew-Hermitian form mu
// with an isometry t, their symmetrization b(x, y) = mu(tx, y) - mu(x, ty),
// primary parts along basic polynomials, and Milnor signatures.
//
// Vectors are columns; t acts by x -> T x, and the isometry condition reads
// T^T mu conj(T) = mu.

#include <optional>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/field.hpp"
#include "milnor/hermforms.hpp"
#include "milnor/laurent.hpp"
#include "milnor/linalg.hpp"

namespace milnor {

template <FieldScalar S>
struct SkewIsometricStructure {
  Matrix<S> mu;
  Matrix<S> t;
  Flavor flavor = Flavor::Complex;

  /// Validates; throws DomainError on any violated invariant.
  static SkewIsometricStructure make(Matrix<S> mu, Matrix<S> t, Flavor flavor) {
    SkewIsometricStructure s{std::move(mu), std::move(t), flavor};
    s.validate();
    return s;
  }

  std::size_t dim() const { return mu.rows(); }

  void validate() const {
    if (!mu.square() || !t.square() || mu.rows() != t.rows()) {
      throw DomainError("isometric structure: mu and t must be square of equal size");
    }
    if (!is_eps_hermitian(mu, -1)) throw DomainError("isometric structure: mu is not skew-Hermitian");
    if (rank(mu) != dim()) throw DomainError("isometric structure: mu is singular");
    if (rank(t) != dim()) throw DomainError("isometric structure: t is not invertible");
    if (!(t.transpose() * mu * entrywise_conj(t) == mu)) {
      throw DomainError("isometric structure: t is not an isometry of mu");
    }
    if (flavor == Flavor::Real) {
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
          if (!is_real(mu(i, j)) || !is_real(t(i, j))) {
            throw DomainError("isometric structure: real flavor requires real entries");
          }
    }
  }
};

/// The generator e(1,1,xi,F): over R the plane with mu = [[0,1],[-1,0]] and
/// t = [[0,-1],[1,2Re xi]]; over C the line with mu = 2i|Im xi| and t = xi.
/// Throws DomainError unless |xi| = 1 and xi != +-1.
template <FieldScalar S>
SkewIsometricStructure<S> elementary_structure(const S& xi, Flavor flavor) {
  if (!on_unit_circle(xi)) throw DomainError("elementary_structure: xi is not on the unit circle");
  if (xi == S(1L) || xi == S(-1L)) throw DomainError("elementary_structure: xi = +-1 is excluded");
  if (flavor == Flavor::Real) {
    const S two_re = xi + conj(xi);
    Matrix<S> mu(2, 2), t(2, 2);
    mu(0, 1) = S(1L);
    mu(1, 0) = S(-1L);
    t(0, 1) = S(-1L);
    t(1, 0) = S(1L);
    t(1, 1) = two_re;
    return SkewIsometricStructure<S>::make(mu, t, flavor);
  }
  // 2i|Im xi| = sign(Im xi) (xi - conj xi)
  Matrix<S> mu(1, 1), t(1, 1);
  mu(0, 0) = S(static_cast<long>(imag_sign(xi))) * (xi - conj(xi));
  t(0, 0) = xi;
  return SkewIsometricStructure<S>::make(mu, t, flavor);
}

/// B = T^T mu - mu conj(T), the Hermitian matrix of mu(tx, y) - mu(x, ty).
template <FieldScalar S>
Matrix<S> symmetrize(const SkewIsometricStructure<S>& s) {
  return s.t.transpose() * s.mu - s.mu * entrywise_conj(s.t);
}

template <FieldScalar S>
SkewIsometricStructure<S> direct_sum(const SkewIsometricStructure<S>& a, const SkewIsometricStructure<S>& b) {
  if (a.flavor != b.flavor) throw DomainError("direct_sum: flavors differ");
  return SkewIsometricStructure<S>{block_diag(a.mu, b.mu), block_diag(a.t, b.t), a.flavor};
}

/// (H, -mu, t)
template <FieldScalar S>
SkewIsometricStructure<S> negate(const SkewIsometricStructure<S>& s) {
  return SkewIsometricStructure<S>{-s.mu, s.t, s.flavor};
}

/// The same structure in the basis given by the columns of an invertible P:
/// mu' = P^T mu conj(P), t' = P^-1 T P.
template <FieldScalar S>
SkewIsometricStructure<S> base_change(const SkewIsometricStructure<S>& s, const Matrix<S>& p) {
  return SkewIsometricStructure<S>{congruence(s.mu, p), inverse(p) * s.t * p, s.flavor};
}

/// sum_k coeffs[k] * m^k
template <FieldScalar S>
Matrix<S> matrix_polynomial(const std::vector<S>& coeffs, const Matrix<S>& m) {
  Matrix<S> acc(m.rows(), m.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) = acc(i, i) + *it;
  }
  return acc;
}

/// Basis of the generalized kernel of q: ker q^m for the first m at which the
/// dimension stops growing.
template <FieldScalar S>
Matrix<S> generalized_kernel(const Matrix<S>& q) {
  Matrix<S> power = q;
  Matrix<S> basis = kernel(power);
  for (std::size_t m = 2; m <= q.rows() && basis.cols() > 0; ++m) {
    power = power * q;
    Matrix<S> next = kernel(power);
    if (next.cols() == basis.cols()) break;
    basis = std::move(next);
  }
  return basis;
}

template <FieldScalar S>
struct PrimaryPart {
  S xi;
  Flavor flavor = Flavor::Complex;
  bool exceptional = false;           // xi = +-1
  Matrix<S> basis;                    // columns span the part inside H
  SkewIsometricStructure<S> structure;  // restriction to the part
  std::size_t dim() const { return basis.cols(); }
};

namespace detail {

/// The basic polynomial at xi applied to T (linear at +-1 and in the complex flavor).
template <FieldScalar S>
Matrix<S> basic_at(const Matrix<S>& t, const S& xi, Flavor flavor, bool exceptional) {
  if (flavor == Flavor::Complex || exceptional) return matrix_polynomial(std::vector<S>{-xi, S(1L)}, t);
  // T^2 - 2Re(xi) T + I
  return matrix_polynomial(std::vector<S>{S(1L), -(xi + conj(xi)), S(1L)}, t);
}

/// Over R the point xi and conj(xi) define the same part; use Im >= 0.
template <FieldScalar S>
S flavor_representative(const S& xi, Flavor flavor) {
  if (flavor == Flavor::Real && imag_sign(xi) < 0) return conj(xi);
  return xi;
}

template <FieldScalar S>
SkewIsometricStructure<S> restrict_to(const SkewIsometricStructure<S>& s, const Matrix<S>& basis) {
  SkewIsometricStructure<S> r;
  r.flavor = s.flavor;
  r.mu = congruence(s.mu, basis);
  r.t = solve_in_span(basis, s.t * basis);
  return r;
}

}  // namespace detail

/// The xi-primary part: the generalized kernel of p_xi(T). xi = +-1 is allowed
/// here (reported as exceptional). Throws DomainError when |xi| != 1.
template <FieldScalar S>
PrimaryPart<S> primary_part(const SkewIsometricStructure<S>& s, const S& xi_in) {
  if (!on_unit_circle(xi_in)) throw DomainError("primary_part: xi is not on the unit circle");
  const S xi = detail::flavor_representative(xi_in, s.flavor);
  PrimaryPart<S> part;
  part.xi = xi;
  part.flavor = s.flavor;
  part.exceptional = xi == S(1L) || xi == S(-1L);
  part.basis = generalized_kernel(detail::basic_at(s.t, xi, s.flavor, part.exceptional));
  part.structure = detail::restrict_to(s, part.basis);
  return part;
}

/// Signature of the symmetrization restricted to the xi-primary part.
/// Throws DomainError for xi = +-1 or |xi| != 1.
template <FieldScalar S>
int milnor_signature(const SkewIsometricStructure<S>& s, const S& xi) {
  if (!on_unit_circle(xi)) throw DomainError("milnor_signature: xi is not on the unit circle");
  if (xi == S(1L) || xi == S(-1L)) throw DomainError("milnor_signature: xi = +-1 is excluded");
  const PrimaryPart<S> part = primary_part(s, xi);
  if (part.dim() == 0) return 0;
  return signature(symmetrize(part.structure)).signature();
}

/// Same invariant computed by restricting the symmetrization of the whole
/// structure to the primary subspace.
template <FieldScalar S>
int milnor_signature_by_restriction(const SkewIsometricStructure<S>& s, const S& xi) {
  if (!on_unit_circle(xi)) throw DomainError("milnor_signature: xi is not on the unit circle");
  if (xi == S(1L) || xi == S(-1L)) throw DomainError("milnor_signature: xi = +-1 is excluded");
  const PrimaryPart<S> part = primary_part(s, xi);
  if (part.dim() == 0) return 0;
  return signature(congruence(symmetrize(s), part.basis)).signature();
}

/// Signature of the (possibly singular) symmetrization.
template <FieldScalar S>
int total_signature(const SkewIsometricStructure<S>& s) {
  return signature(symmetrize(s)).signature();
}

template <FieldScalar S>
struct PrimaryDecomposition {
  std::vector<PrimaryPart<S>> parts;  // xi != +-1
  std::size_t dim_plus_one = 0;       // generalized eigenspace of t at 1
  std::size_t dim_minus_one = 0;      // generalized eigenspace of t at -1
  Matrix<S> residual_basis;           // factors of char(t) without candidate roots on the circle
};

/// Parts indexed by the basic factors of the characteristic polynomial of t.
PrimaryDecomposition<CycloNumber> primary_decomposition(const SkewIsometricStructure<CycloNumber>& s,
                                                        const FactorOptions& opts = {});

/// Float backend: parts at caller-supplied points (exact factorization is
/// unavailable); points with an empty part are dropped.
PrimaryDecomposition<ApproxComplex> primary_decomposition(const SkewIsometricStructure<ApproxComplex>& s,
                                                          const std::vector<ApproxComplex>& candidates);

/// mu(x, y) = 0 for x, y in distinct parts (and between parts and the residual).
template <FieldScalar S>
bool parts_orthogonal(const SkewIsometricStructure<S>& s, const PrimaryDecomposition<S>& d) {
  std::vector<Matrix<S>> blocks;
  for (const auto& p : d.parts) blocks.push_back(p.basis);
  if (d.residual_basis.cols() > 0) blocks.push_back(d.residual_basis);
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      if (!is_zero_matrix(Matrix<S>(blocks[a].transpose() * s.mu * entrywise_conj(blocks[b])))) return false;
  return true;
}

/// Characteristic polynomial of t as a Laurent polynomial (degrees 0..dim).
LaurentPoly characteristic_laurent(const Matrix<CycloNumber>& t);

/// Milnor signature given the characteristic polynomial of t (from
/// characteristic_laurent); points where it does not vanish return 0 without
/// a kernel computation. Same errors as milnor_signature.
int milnor_signature(const SkewIsometricStructure<CycloNumber>& s, const CycloNumber& xi, const LaurentPoly& char_t);

/// Exact structure as floats with the given tolerance.
SkewIsometricStructure<ApproxComplex> to_float(const SkewIsometricStructure<CycloNumber>& s,
                                               double tolerance = kDefaultTolerance);

}  // namespace milnor
