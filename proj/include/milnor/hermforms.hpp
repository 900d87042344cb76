#pragma once

// epsilon-Hermitian matrices, signatures by congruence diagonalization, and
// metabolizer verification.
//
// A matrix M represents the form (x, y) -> x^T M conj(y). It is
// epsilon-Hermitian when conj(M)^T = epsilon * M. A change of basis x = P x'
// replaces M by P^T M conj(P).

#include <cmath>
#include <optional>
#include <string>

#include "milnor/errors.hpp"
#include "milnor/field.hpp"
#include "milnor/linalg.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

struct SignatureReport {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeroes = 0;

  int signature() const { return static_cast<int>(positives) - static_cast<int>(negatives); }
  std::size_t dimension() const { return positives + negatives + zeroes; }
  SignatureReport& operator+=(const SignatureReport& o) {
    positives += o.positives;
    negatives += o.negatives;
    zeroes += o.zeroes;
    return *this;
  }
  friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

template <FieldScalar S>
bool is_eps_hermitian(const Matrix<S>& a, int epsilon) {
  if (!a.square() || (epsilon != 1 && epsilon != -1)) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(conj(a(j, i)) == S(static_cast<long>(epsilon)) * a(i, j))) return false;
  return true;
}

template <FieldScalar S>
struct HermitianMatrix {
  int epsilon = 1;
  Matrix<S> entries;
  Flavor flavor = Flavor::Complex;

  /// Throws DomainError unless entries are epsilon-Hermitian (and real in the real flavor).
  static HermitianMatrix make(Matrix<S> entries, int epsilon, Flavor flavor) {
    if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
    if (!is_eps_hermitian(entries, epsilon)) {
      throw DomainError(std::string("matrix is not ") + (epsilon == 1 ? "Hermitian" : "skew-Hermitian"));
    }
    if (flavor == Flavor::Real) {
      for (std::size_t i = 0; i < entries.rows(); ++i)
        for (std::size_t j = 0; j < entries.cols(); ++j)
          if (!is_real(entries(i, j))) throw DomainError("real flavor requires real entries");
    }
    return HermitianMatrix{epsilon, std::move(entries), flavor};
  }

  std::size_t dimension() const { return entries.rows(); }
};

namespace detail {

template <FieldScalar S>
void swap_sym(Matrix<S>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

template <FieldScalar S>
double magnitude_of(const S& v) {
  if constexpr (ScalarTraits<S>::exact) {
    return std::abs(v.to_complex());
  } else {
    return magnitude(v);
  }
}

/// Remaining block after eliminating the leading k x k pivot block E (k = 1, 2).
template <FieldScalar S>
Matrix<S> schur_complement(const Matrix<S>& m, std::size_t k, const Matrix<S>& e_inv) {
  const std::size_t n = m.rows() - k;
  Matrix<S> out(n, n);
  // C = m[k:, :k]; out = m[k:, k:] - C e_inv C^*
  Matrix<S> c_einv(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < k; ++a) {
      S acc(0L);
      for (std::size_t b = 0; b < k; ++b)
        if (!is_zero(m(k + i, b))) acc = acc + m(k + i, b) * e_inv(b, a);
      c_einv(i, a) = acc;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      S acc = m(k + i, k + j);
      for (std::size_t a = 0; a < k; ++a)
        if (!is_zero(c_einv(i, a)) && !is_zero(m(a, k + j))) acc = acc - c_einv(i, a) * m(a, k + j);
      out(i, j) = acc;
    }
  return out;
}

}  // namespace detail

/// Inertia of a Hermitian matrix by symmetric congruence elimination.
/// Exact scalars pivot on the first nonzero diagonal entry, falling back to a
/// 2x2 off-diagonal block (a hyperbolic plane, contributing one positive and
/// one negative); float scalars use the Bunch-Parlett rule. Zero pivots are
/// counted, not rejected. Throws DomainError on non-Hermitian input.
template <FieldScalar S>
SignatureReport signature(const Matrix<S>& h) {
  if (!is_eps_hermitian(h, 1)) throw DomainError("signature: matrix is not Hermitian");
  SignatureReport report;
  Matrix<S> m = h;
  while (m.rows() > 0) {
    const std::size_t n = m.rows();
    std::optional<std::size_t> diag;
    std::optional<std::pair<std::size_t, std::size_t>> off;
    if constexpr (ScalarTraits<S>::exact) {
      for (std::size_t i = 0; i < n && !diag; ++i)
        if (!is_zero(m(i, i))) diag = i;
      if (!diag) {
        for (std::size_t i = 0; i < n && !off; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(m(i, j))) {
              off = std::pair{i, j};
              break;
            }
      }
    } else {
      const double alpha = (1.0 + std::sqrt(17.0)) / 8.0;
      double mu0 = 0.0, mu1 = 0.0;
      std::size_t di = 0, oi = 0, oj = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = is_zero(m(i, i)) ? 0.0 : detail::magnitude_of(m(i, i));
        if (d > mu1) {
          mu1 = d;
          di = i;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
          const double o = is_zero(m(i, j)) ? 0.0 : detail::magnitude_of(m(i, j));
          if (o > mu0) {
            mu0 = o;
            oi = i;
            oj = j;
          }
        }
      }
      if (mu1 > 0.0 && mu1 >= alpha * mu0) {
        diag = di;
      } else if (mu0 > 0.0) {
        off = std::pair{oi, oj};
      }
    }

    if (diag) {
      detail::swap_sym(m, 0, *diag);
      const S d = m(0, 0);
      (sign_real(d) > 0 ? report.positives : report.negatives) += 1;
      Matrix<S> e_inv(1, 1);
      e_inv(0, 0) = S(1L) / d;
      m = detail::schur_complement(m, 1, e_inv);
    } else if (off) {
      detail::swap_sym(m, 0, off->first);
      detail::swap_sym(m, 1, off->second);
      const S a = m(0, 0), b = m(0, 1), c = m(1, 1);
      const S det = a * c - b * conj(b);
      const int det_sign = sign_real(det);
      if (det_sign < 0) {
        report.positives += 1;
        report.negatives += 1;
      } else {
        const int tr = sign_real(a + c);
        (tr > 0 ? report.positives : report.negatives) += 2;
      }
      Matrix<S> e_inv(2, 2);
      const S inv_det = S(1L) / det;
      e_inv(0, 0) = c * inv_det;
      e_inv(0, 1) = -b * inv_det;
      e_inv(1, 0) = -conj(b) * inv_det;
      e_inv(1, 1) = a * inv_det;
      m = detail::schur_complement(m, 2, e_inv);
    } else {
      report.zeroes += n;
      break;
    }
  }
  return report;
}

/// Requires epsilon = +1.
template <FieldScalar S>
SignatureReport signature(const HermitianMatrix<S>& h) {
  if (h.epsilon != 1) throw DomainError("signature of a skew-Hermitian form is not defined; symmetrize first");
  return signature(h.entries);
}

/// P^T M conj(P): the same form in the basis given by the columns of P.
template <FieldScalar S>
Matrix<S> congruence(const Matrix<S>& m, const Matrix<S>& p) {
  return p.transpose() * m * entrywise_conj(p);
}

/// True iff the columns of L span a metabolizer of the nonsingular form h
/// (invariant under t when given): h vanishes on L x L and 2 dim L = dim h.
/// Throws DomainError when the columns of L are dependent.
template <FieldScalar S>
bool verify_metabolizer(const Matrix<S>& h, const std::optional<Matrix<S>>& t, const Matrix<S>& l) {
  if (l.rows() != h.rows()) throw DomainError("verify_metabolizer: subspace dimension mismatch");
  const std::size_t k = rank(l);
  if (k != l.cols()) throw DomainError("verify_metabolizer: subspace columns are dependent");
  if (2 * k != h.rows()) return false;
  if (rank(h) != h.rows()) return false;
  if (!is_zero_matrix(congruence(h, l))) return false;
  if (t) {
    if (rank(hconcat(l, *t * l)) != k) return false;
  }
  return true;
}

}  // namespace milnor
