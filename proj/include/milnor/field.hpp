#pragma once

// Field flavors and the scalar types the linear-algebra layer is generic over.
//
// Two scalar types are supported:
//   CycloNumber    exact, zero tests and signs are decided exactly;
//   ApproxComplex  std::complex<double> with a tolerance; |x| < tol counts as zero
//                  everywhere a sign or rank decision is made.

#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include "milnor/cyclo.hpp"

namespace milnor {

/// Which involution the coefficient field carries.
enum class Flavor {
  Real,     // F = R, trivial involution (modeled as conj-fixed elements)
  Complex,  // F = C, complex conjugation
};

enum class Backend { ExactCyclotomic, FloatComplex };

inline constexpr double kDefaultTolerance = 1e-9;

struct FieldFlavor {
  Flavor tag = Flavor::Complex;
  Backend backend = Backend::ExactCyclotomic;
  int order = 1;                        // ambient cyclotomic order (exact backend)
  double tolerance = kDefaultTolerance;  // float backend only

  static FieldFlavor exact(Flavor tag, int order = 1) {
    return FieldFlavor{tag, Backend::ExactCyclotomic, order, kDefaultTolerance};
  }
  static FieldFlavor floating(Flavor tag, double tolerance = kDefaultTolerance) {
    return FieldFlavor{tag, Backend::FloatComplex, 1, tolerance};
  }
  /// Throws DomainError on order < 1 or non-positive tolerance.
  void validate() const;
};

std::string to_string(Flavor f);
/// "real" / "complex" (also "R" / "C"). Throws ParseError.
Flavor parse_flavor(std::string_view text);

/// Floating complex scalar carrying its zero tolerance.
class ApproxComplex {
 public:
  ApproxComplex() = default;
  ApproxComplex(long v) : value_(static_cast<double>(v)) {}  // NOLINT(google-explicit-constructor)
  ApproxComplex(std::complex<double> v, double tol = kDefaultTolerance) : value_(v), tol_(tol) {}  // NOLINT
  explicit ApproxComplex(const CycloNumber& z, double tol = kDefaultTolerance)
      : value_(z.to_complex()), tol_(tol) {}

  std::complex<double> value() const { return value_; }
  double tolerance() const { return tol_; }

  ApproxComplex& operator+=(const ApproxComplex& o) { value_ += o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  ApproxComplex& operator-=(const ApproxComplex& o) { value_ -= o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  ApproxComplex& operator*=(const ApproxComplex& o) { value_ *= o.value_; tol_ = std::max(tol_, o.tol_); return *this; }
  ApproxComplex& operator/=(const ApproxComplex& o) { value_ /= o.value_; tol_ = std::max(tol_, o.tol_); return *this; }

  friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
  friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
  friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
  friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }
  friend ApproxComplex operator-(ApproxComplex a) { a.value_ = -a.value_; return a; }
  /// Equal within the larger of the two tolerances.
  friend bool operator==(const ApproxComplex& a, const ApproxComplex& b) {
    return std::abs(a.value_ - b.value_) < std::max(a.tol_, b.tol_);
  }

  ApproxComplex inverse() const { return ApproxComplex(1.0 / value_, tol_); }

 private:
  std::complex<double> value_{0.0, 0.0};
  double tol_ = kDefaultTolerance;
};

inline bool is_zero(const ApproxComplex& z) { return std::abs(z.value()) < z.tolerance(); }
inline ApproxComplex conj(const ApproxComplex& z) { return ApproxComplex(std::conj(z.value()), z.tolerance()); }
inline bool is_real(const ApproxComplex& z) { return std::abs(z.value().imag()) < z.tolerance(); }
/// Sign of the real part with |re| < tol treated as zero; the imaginary part must be negligible.
int sign_real(const ApproxComplex& z);
int imag_sign(const ApproxComplex& z);
inline ApproxComplex real_part(const ApproxComplex& z) { return ApproxComplex(std::complex<double>(z.value().real(), 0.0), z.tolerance()); }
inline bool on_unit_circle(const ApproxComplex& z) { return std::abs(std::abs(z.value()) - 1.0) < z.tolerance(); }
inline double magnitude(const ApproxComplex& z) { return std::abs(z.value()); }
std::string to_string(const ApproxComplex& z);

/// Arithmetic and decision procedures the generic algorithms rely on.
template <class S>
concept FieldScalar = requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { conj(a) } -> std::convertible_to<S>;
  { sign_real(a) } -> std::convertible_to<int>;
  S(0L);
  S(1L);
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<CycloNumber> {
  static constexpr bool exact = true;
  /// Pivot preference; exact elimination takes the first nonzero entry.
  static double weight(const CycloNumber& z) { return z.is_zero() ? 0.0 : 1.0; }
};

template <>
struct ScalarTraits<ApproxComplex> {
  static constexpr bool exact = false;
  static double weight(const ApproxComplex& z) { return is_zero(z) ? 0.0 : magnitude(z); }
};

}  // namespace milnor
