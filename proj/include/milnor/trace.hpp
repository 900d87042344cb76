#pragma once

// The trace map chi: F(t)/Lambda -> F, computed from the constant terms of the
// ascending expansion (i+, powers of t) and the descending expansion (i-,
// powers of t^-1) of a rational function.

#include <vector>

#include "milnor/laurent.hpp"

namespace milnor {

/// Coefficients of a one-sided series in degrees lo..hi.
struct SeriesWindow {
  int lo = 0;
  int hi = 0;
  std::vector<CycloNumber> coeffs;  // coeffs[k - lo] is the coefficient of t^k

  /// Throws DomainError outside [lo, hi].
  const CycloNumber& at(int degree) const;
  /// The window as a Laurent polynomial (truncation of the series).
  LaurentPoly truncation() const;
};

/// i+(f) in degrees min(0, lowest)..max(hi, 0).
SeriesWindow expand_plus(const RationalFunction& f, int hi);
/// i-(f) in degrees min(lo, 0)..max(0, highest).
SeriesWindow expand_minus(const RationalFunction& f, int lo);

/// const(i+ f) - const(i- f). Vanishes on Laurent polynomials.
CycloNumber trace_chi(const RationalFunction& f);

/// chi(t^m f) for m = m_lo..m_hi, sharing one pair of expansions.
std::vector<CycloNumber> trace_chi_shifts(const RationalFunction& f, int m_lo, int m_hi);

}  // namespace milnor
