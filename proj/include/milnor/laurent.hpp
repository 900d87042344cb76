#pragma once

// Laurent polynomials F[t, t^-1] over cyclotomic scalars, the involution
// a t^k -> conj(a) t^-k, rational functions, basic polynomials and their
// extraction, and Smith normal form over the Laurent ring.
//
// The ring is Euclidean for the degree span (max degree - min degree); every
// division step shifts both operands to lowest degree 0 and divides in F[t].

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnor/cyclo.hpp"
#include "milnor/field.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);                 // NOLINT(google-explicit-constructor)
  LaurentPoly(const CycloNumber& c);   // NOLINT(google-explicit-constructor)
  /// c * t^degree
  static LaurentPoly monomial(const CycloNumber& c, int degree);
  static LaurentPoly t(int power = 1) { return monomial(CycloNumber(1), power); }
  /// coeffs[i] is the coefficient of t^(lowest + i).
  static LaurentPoly from_coeffs(const std::vector<CycloNumber>& coeffs, int lowest = 0);

  const std::map<int, CycloNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero times a single power of t.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// Degree bounds; throw DomainError on the zero polynomial.
  int min_degree() const;
  int max_degree() const;
  /// max_degree - min_degree; -1 for zero.
  int span() const { return is_zero() ? -1 : max_degree() - min_degree(); }
  CycloNumber coeff(int degree) const;
  const CycloNumber& leading_coeff() const;
  const CycloNumber& trailing_coeff() const;
  /// Coefficients from min_degree to max_degree, zeros included.
  std::vector<CycloNumber> dense() const;

  LaurentPoly shifted(int k) const;
  CycloNumber evaluate(const CycloNumber& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const CycloNumber& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const CycloNumber& c) { return a *= c; }
  friend LaurentPoly operator*(const CycloNumber& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void set(int degree, CycloNumber c);
  std::map<int, CycloNumber> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
LaurentPoly invol(const LaurentPoly& p);
LaurentPoly pow(const LaurentPoly& p, unsigned n);
/// "2 + z4^1*t^-1 + ..." with z<N> = zeta_N.
std::string to_string(const LaurentPoly& p);

/// p = unit * normal with normal of lowest degree 0 and leading coefficient 1.
struct NormalizedPoly {
  LaurentPoly normal;
  LaurentPoly unit;  // c * t^k
};
/// Throws DomainError on zero.
NormalizedPoly normalize(const LaurentPoly& p);
LaurentPoly normalized(const LaurentPoly& p);

/// Inverse of a unit c t^k. Throws DomainError when p is not a unit.
LaurentPoly unit_inverse(const LaurentPoly& p);

/// a = q b + r with span(r) < span(b) (r = 0 allowed). Throws DomainError when b = 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
/// a / b; throws DomainError when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);
/// Normalized gcd; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// a and b differ by a unit factor.
bool associated(const LaurentPoly& a, const LaurentPoly& b);

/// Element of F(t): numerator / denominator, kept reduced with the denominator
/// normalized (lowest degree 0, monic).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1L) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when den = 0.
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is a unit, i.e. the function lies in the Laurent ring.
  bool is_laurent() const { return den_.is_unit(); }

  /// Canonical representative modulo the Laurent ring: polynomial numerator of
  /// degree < deg(denominator), supported in degrees >= 0.
  RationalFunction mod_lambda() const;

  CycloNumber evaluate(const CycloNumber& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();
  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
RationalFunction invol(const RationalFunction& f);
/// f and g agree modulo the Laurent ring.
bool equal_mod_lambda(const RationalFunction& f, const RationalFunction& g);
std::string to_string(const RationalFunction& f);

/// p_xi: t - 2Re(xi) + t^-1 (real flavor) or t - xi (complex flavor).
/// `exceptional` marks the linear factors at xi = +-1, which signature
/// operations reject.
struct BasicPolynomial {
  CycloNumber xi;
  Flavor flavor = Flavor::Complex;
  LaurentPoly poly;
  bool exceptional = false;
};

/// Requires |xi| = 1; the real flavor also requires Im(xi) > 0.
/// In the complex flavor xi = +-1 yields an exceptional polynomial.
BasicPolynomial basic_poly(const CycloNumber& xi, Flavor flavor);
/// The linear factor t - xi for xi = +-1, flagged exceptional (either flavor).
BasicPolynomial exceptional_poly(int sign_of_xi, Flavor flavor);
/// Same point on the circle under the flavor's identification
/// (real flavor identifies xi with conj(xi)).
bool same_basic(const BasicPolynomial& a, const BasicPolynomial& b);
std::string to_string(const BasicPolynomial& p);

struct FactorOptions {
  /// Candidate roots are zeta_M^k with M <= max_order.
  int max_order = 120;
};

struct BasicFactorization {
  LaurentPoly unit;
  std::vector<std::pair<BasicPolynomial, int>> factors;
  /// Normalized cofactor with no candidate root on the circle.
  LaurentPoly residual;
};

/// p = unit * prod factors^mult * residual. Throws DomainError when p = 0.
BasicFactorization factor_basic(const LaurentPoly& p, Flavor flavor, const FactorOptions& opts = {});
LaurentPoly expand(const BasicFactorization& f);

using LaurentMatrix = Matrix<LaurentPoly>;

struct SmithForm {
  LaurentMatrix U, D, W;   // U A W = D
  LaurentMatrix U_inv, W_inv;
  /// Normalized diagonal, d_1 | d_2 | ...; zeros last.
  std::vector<LaurentPoly> diagonal() const;
};

SmithForm smith_normal_form(const LaurentMatrix& a);
/// Fraction-free elimination. Throws DomainError on a non-square matrix.
LaurentPoly determinant(const LaurentMatrix& a);
LaurentMatrix invol_transpose(const LaurentMatrix& a);
LaurentMatrix entrywise_invol(const LaurentMatrix& a);

}  // namespace milnor
