#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N) with the involution
// zeta -> zeta^{-1}, plus a rigorous sign for real elements.
//
// An element of order N is stored by its phi(N) coefficients over the power
// basis 1, zeta_N, ..., zeta_N^{phi(N)-1}, fully reduced modulo the N-th
// cyclotomic polynomial, as integer numerators over one positive denominator
// coprime to them. Elements of different orders are combined in
// Q(zeta_lcm); equality is decided after promotion, so it is exact.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p" (optionally signed). Throws ParseError.
Rational parse_rational(std::string_view text);

int euler_phi(int n);
/// Integer coefficients of Phi_n, ascending degree.
const std::vector<long>& cyclotomic_polynomial(int n);

class CycloNumber {
 public:
  CycloNumber();
  CycloNumber(long value);              // NOLINT(google-explicit-constructor)
  CycloNumber(const Rational& value);   // NOLINT(google-explicit-constructor)
  /// `coeffs` must have length phi(order). Throws DomainError on order < 1.
  CycloNumber(int order, std::vector<Rational> coeffs);

  /// zeta_order^exponent. Throws DomainError when order < 1.
  static CycloNumber root_of_unity(int order, long exponent);

  int order() const { return order_; }
  std::vector<Rational> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful as "the value" only when is_rational().
  Rational constant_coeff() const;

  /// Same element written over Q(zeta_new_order); new_order must be a multiple of order().
  CycloNumber promoted(int new_order) const;

  CycloNumber inverse() const;
  /// Image under zeta_N -> zeta_N^k; k must be coprime to order().
  CycloNumber galois(long k) const;
  std::complex<double> to_complex() const;

  CycloNumber& operator+=(const CycloNumber& rhs);
  CycloNumber& operator-=(const CycloNumber& rhs);
  CycloNumber& operator*=(const CycloNumber& rhs);
  CycloNumber& operator/=(const CycloNumber& rhs);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend CycloNumber operator-(CycloNumber a);
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

 private:
  CycloNumber(int order, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  int order_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

/// zeta_order^exponent in canonical form.
CycloNumber cyclo(int order, long exponent);
CycloNumber conj(const CycloNumber& z);

inline bool is_zero(const CycloNumber& z) { return z.is_zero(); }
bool is_real(const CycloNumber& z);
/// (z + conj z) / 2
CycloNumber real_part(const CycloNumber& z);
/// (z - conj z) / (2i), a real element.
CycloNumber imag_part(const CycloNumber& z);
/// z * conj(z) == 1
bool on_unit_circle(const CycloNumber& z);

/// Exact sign of a real element under zeta_N -> exp(2 pi i / N).
/// Throws DomainError when conj(z) != z.
int sign_real(const CycloNumber& z);
/// sign(Im z)
int imag_sign(const CycloNumber& z);

/// Human-readable form such as "1/2 + 3*z12^2" (z12 = zeta_12).
std::string to_string(const CycloNumber& z);

}  // namespace milnor
