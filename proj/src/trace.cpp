#include "milnor/trace.hpp"

#include <algorithm>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

/// Coefficients of i+(num/den) in degrees from..to (from <= to).
std::vector<CycloNumber> ascending_coeffs(const LaurentPoly& num, const LaurentPoly& den, int from, int to) {
  std::vector<CycloNumber> out(static_cast<std::size_t>(to - from + 1));
  if (num.is_zero()) return out;
  // den = t^k q(t), q(0) != 0
  const int k = den.min_degree();
  const std::vector<CycloNumber> q = den.dense();
  const int lowest = num.min_degree() - k;
  const int need = to - lowest;  // largest index of 1/q used
  if (need < 0) return out;

  std::vector<CycloNumber> inv(static_cast<std::size_t>(need + 1));
  const CycloNumber q0_inv = q[0].inverse();
  inv[0] = q0_inv;
  for (int j = 1; j <= need; ++j) {
    CycloNumber acc;
    for (int i = 1; i <= j && i < static_cast<int>(q.size()); ++i) {
      if (!q[i].is_zero() && !inv[j - i].is_zero()) acc += q[i] * inv[j - i];
    }
    inv[j] = -acc * q0_inv;
  }
  // coefficient of t^e in t^-k * num * inv
  for (int e = std::max(from, lowest); e <= to; ++e) {
    CycloNumber acc;
    for (const auto& [d, c] : num.terms()) {
      const int idx = e + k - d;
      if (idx < 0) break;
      if (idx <= need && !inv[idx].is_zero()) acc += c * inv[idx];
    }
    out[static_cast<std::size_t>(e - from)] = acc;
  }
  return out;
}

/// t -> t^-1 on degrees, coefficients unchanged.
LaurentPoly reflect(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [d, c] : p.terms()) out += LaurentPoly::monomial(c, -d);
  return out;
}

/// Coefficients of i-(num/den) in degrees from..to.
std::vector<CycloNumber> descending_coeffs(const LaurentPoly& num, const LaurentPoly& den, int from, int to) {
  auto mirrored = ascending_coeffs(reflect(num), reflect(den), -to, -from);
  std::reverse(mirrored.begin(), mirrored.end());
  return mirrored;
}

void require_nonzero(const RationalFunction& f) {
  if (f.denominator().is_zero()) throw DomainError("trace: zero denominator");
}

}  // namespace

const CycloNumber& SeriesWindow::at(int degree) const {
  if (degree < lo || degree > hi) throw DomainError("series coefficient requested outside the window");
  return coeffs[static_cast<std::size_t>(degree - lo)];
}

LaurentPoly SeriesWindow::truncation() const { return LaurentPoly::from_coeffs(coeffs, lo); }

SeriesWindow expand_plus(const RationalFunction& f, int hi) {
  require_nonzero(f);
  SeriesWindow w;
  w.hi = std::max(hi, 0);
  w.lo = 0;
  if (!f.is_zero()) w.lo = std::min(0, f.numerator().min_degree() - f.denominator().min_degree());
  w.coeffs = ascending_coeffs(f.numerator(), f.denominator(), w.lo, w.hi);
  return w;
}

SeriesWindow expand_minus(const RationalFunction& f, int lo) {
  require_nonzero(f);
  SeriesWindow w;
  w.lo = std::min(lo, 0);
  w.hi = 0;
  if (!f.is_zero()) w.hi = std::max(0, f.numerator().max_degree() - f.denominator().max_degree());
  w.coeffs = descending_coeffs(f.numerator(), f.denominator(), w.lo, w.hi);
  return w;
}

CycloNumber trace_chi(const RationalFunction& f) { return trace_chi_shifts(f, 0, 0).front(); }

std::vector<CycloNumber> trace_chi_shifts(const RationalFunction& f, int m_lo, int m_hi) {
  require_nonzero(f);
  if (m_hi < m_lo) return {};
  // chi(t^m f) = [t^-m] i+(f) - [t^-m] i-(f)
  const auto plus = ascending_coeffs(f.numerator(), f.denominator(), -m_hi, -m_lo);
  const auto minus = descending_coeffs(f.numerator(), f.denominator(), -m_hi, -m_lo);
  std::vector<CycloNumber> out(static_cast<std::size_t>(m_hi - m_lo + 1));
  for (int m = m_lo; m <= m_hi; ++m) {
    const auto idx = static_cast<std::size_t>(-m + m_hi);
    out[static_cast<std::size_t>(m - m_lo)] = plus[idx] - minus[idx];
  }
  return out;
}

}  // namespace milnor
