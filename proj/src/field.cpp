#include "milnor/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

void FieldFlavor::validate() const {
  if (order < 1) throw DomainError("field flavor: cyclotomic order must be >= 1");
  if (backend == Backend::FloatComplex && !(tolerance > 0.0)) {
    throw DomainError("field flavor: float tolerance must be positive");
  }
}

std::string to_string(Flavor f) { return f == Flavor::Real ? "real" : "complex"; }

Flavor parse_flavor(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "real" || s == "r") return Flavor::Real;
  if (s == "complex" || s == "c") return Flavor::Complex;
  throw ParseError("unknown flavor '" + std::string(text) + "' (expected real|complex)");
}

int sign_real(const ApproxComplex& z) {
  if (!is_real(z)) {
    throw DomainError("sign_real: element is not real within tolerance: " + to_string(z));
  }
  const double re = z.value().real();
  if (std::abs(re) < z.tolerance()) return 0;
  return re > 0 ? 1 : -1;
}

int imag_sign(const ApproxComplex& z) {
  const double im = z.value().imag();
  if (std::abs(im) < z.tolerance()) return 0;
  return im > 0 ? 1 : -1;
}

std::string to_string(const ApproxComplex& z) {
  std::ostringstream out;
  out.precision(12);
  out << z.value().real();
  if (z.value().imag() != 0.0) out << (z.value().imag() < 0 ? "-" : "+") << std::abs(z.value().imag()) << "i";
  return out.str();
}

}  // namespace milnor
