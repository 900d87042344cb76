#pragma once

// Gaussian elimination over a field: echelon forms, rank, kernels, inverses,
// determinants and characteristic polynomials.
//
// Exact scalars pivot on the first nonzero entry (deterministic); float scalars
// pivot on the entry of largest magnitude and treat |x| < tol as zero.

#include <algorithm>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/field.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

template <FieldScalar S>
struct RowEchelon {
  Matrix<S> reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row
};

namespace detail {

/// Row in [from, rows) to pivot on in column c, or rows() if the column is zero there.
template <FieldScalar S>
std::size_t choose_pivot(const Matrix<S>& m, std::size_t from, std::size_t c) {
  std::size_t best = m.rows();
  double best_weight = 0.0;
  for (std::size_t r = from; r < m.rows(); ++r) {
    const double w = ScalarTraits<S>::weight(m(r, c));
    if (w <= 0.0) continue;
    if constexpr (ScalarTraits<S>::exact) return r;
    if (w > best_weight) {
      best_weight = w;
      best = r;
    }
  }
  return best;
}

template <FieldScalar S>
void swap_rows(Matrix<S>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

template <FieldScalar S>
RowEchelon<S> rref(Matrix<S> m) {
  RowEchelon<S> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = detail::choose_pivot(m, r, c);
    if (p == m.rows()) {
      for (std::size_t i = r; i < m.rows(); ++i) m(i, c) = S(0L);
      continue;
    }
    detail::swap_rows(m, p, r);
    const S inv = S(1L) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) {
        m(i, c) = i == r ? S(1L) : S(0L);
        continue;
      }
      const S f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
      m(i, c) = S(0L);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <FieldScalar S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).pivot_cols.size();
}

/// Columns form a basis of { x : m x = 0 }.
template <FieldScalar S>
Matrix<S> kernel(const Matrix<S>& m) {
  const auto ech = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<S> basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = S(1L);
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) basis(ech.pivot_cols[i], k) = -ech.reduced(i, f);
  }
  return basis;
}

template <FieldScalar S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  const auto ech = rref(hconcat(m, Matrix<S>::identity(n)));
  if (ech.pivot_cols.size() < n || (n > 0 && ech.pivot_cols[n - 1] >= n)) {
    throw DomainError("inverse: matrix is singular");
  }
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

template <FieldScalar S>
bool is_invertible(const Matrix<S>& m) {
  return m.square() && rank(m) == m.rows();
}

template <FieldScalar S>
S determinant(Matrix<S> m) {
  if (!m.square()) throw DomainError("determinant: matrix is not square");
  S det(1L);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = detail::choose_pivot(m, c, c);
    if (p == n) return S(0L);
    if (p != c) {
      detail::swap_rows(m, p, c);
      det = -det;
    }
    det = det * m(c, c);
    const S inv = S(1L) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// X with basis * X = targets. `basis` must have independent columns; throws
/// DomainError when some target column is outside their span.
template <FieldScalar S>
Matrix<S> solve_in_span(const Matrix<S>& basis, const Matrix<S>& targets) {
  const std::size_t k = basis.cols();
  const auto ech = rref(hconcat(basis, targets));
  if (ech.pivot_cols.size() != k) {
    throw DomainError("solve_in_span: target outside span or basis columns dependent");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (ech.pivot_cols[i] != i) throw DomainError("solve_in_span: basis columns are dependent");
  }
  Matrix<S> x(k, targets.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < targets.cols(); ++j) x(i, j) = ech.reduced(i, k + j);
  return x;
}

/// Coefficients of det(x I - m), ascending degree, monic.
/// Similarity reduction to upper Hessenberg form followed by the standard
/// three-term recurrence on leading principal minors.
template <FieldScalar S>
std::vector<S> characteristic_polynomial(Matrix<S> h) {
  if (!h.square()) throw DomainError("characteristic polynomial: matrix is not square");
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    const std::size_t p = detail::choose_pivot(h, m, m - 1);
    if (p == n) continue;
    if (p != m) {
      detail::swap_rows(h, p, m);
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, m));
    }
    const S inv = S(1L) / h(m, m - 1);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (is_zero(h(j, m - 1))) continue;
      const S u = h(j, m - 1) * inv;
      for (std::size_t c = 0; c < n; ++c) h(j, c) = h(j, c) - u * h(m, c);
      for (std::size_t r = 0; r < n; ++r) h(r, m) = h(r, m) + u * h(r, j);
    }
  }
  // polys[k] = characteristic polynomial of the leading k x k block
  std::vector<std::vector<S>> polys(n + 1);
  polys[0] = {S(1L)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<S> p(m + 1, S(0L));
    const auto& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      p[d + 1] = p[d + 1] + prev[d];
      p[d] = p[d] - h(m - 1, m - 1) * prev[d];
    }
    S t(1L);
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h(m - i, m - i - 1);
      if (is_zero(t)) break;
      const S f = t * h(m - i - 1, m - 1);
      const auto& q = polys[m - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) p[d] = p[d] - f * q[d];
    }
    polys[m] = std::move(p);
  }
  return polys[n];
}

}  // namespace milnor
