#include <cmath>
#include <random>

#include "doctest.h"
#include "milnor/cyclo.hpp"
#include "milnor/errors.hpp"

using namespace milnor;

namespace {

CycloNumber random_element(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> c(euler_phi(order));
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return CycloNumber(order, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(20) == 8);
}

TEST_CASE("roots of unity") {
  CHECK(cyclo(1, 0) == CycloNumber(1));
  const CycloNumber i = cyclo(4, 1);
  CHECK(i * i == CycloNumber(-1));
  CHECK(cyclo(6, 1) + cyclo(6, 5) == CycloNumber(1));
  CHECK(cyclo(12, 2) == cyclo(6, 1));
  CHECK(cyclo(8, 2) == i);
  CHECK(cyclo(6, -1) == cyclo(6, 5));
  CHECK_THROWS_AS(cyclo(0, 1), DomainError);
}

TEST_CASE("involution examples") {
  CHECK(conj(CycloNumber(Rational(3, 2))) == CycloNumber(Rational(3, 2)));
  CHECK(conj(cyclo(6, 1)) == cyclo(6, 5));
  const CycloNumber i = cyclo(4, 1);
  CHECK(conj(CycloNumber(1) + 2 * i) == CycloNumber(1) - 2 * i);
}

TEST_CASE("field operations") {
  const CycloNumber z = cyclo(5, 1) + CycloNumber(Rational(1, 3));
  CHECK(z * z.inverse() == CycloNumber(1));
  CHECK((z / z) == CycloNumber(1));
  CHECK_THROWS_AS(CycloNumber(0).inverse(), DomainError);
  // mixed orders combine in the compositum
  const CycloNumber w = cyclo(3, 1) * cyclo(4, 1);
  CHECK(w == cyclo(12, 7));
  CHECK(on_unit_circle(cyclo(20, 3)));
  CHECK_FALSE(on_unit_circle(CycloNumber(2)));
}

TEST_CASE("sign_real examples") {
  CHECK(sign_real(CycloNumber(0)) == 0);
  CHECK(sign_real(cyclo(5, 1) + cyclo(5, -1)) == 1);
  CHECK(sign_real(cyclo(3, 1) + cyclo(3, -1)) == -1);
  CHECK_THROWS_AS(sign_real(cyclo(4, 1)), DomainError);
  // 2cos(2pi/7) + 2cos(4pi/7) + 2cos(6pi/7) = -1
  CycloNumber s;
  for (int k = 1; k <= 6; ++k) s += cyclo(7, k);
  CHECK(sign_real(s) == -1);
  CHECK(sign_real(s + 1) == 0);
}

TEST_CASE("imag_sign examples") {
  CHECK(imag_sign(cyclo(4, 1)) == 1);
  CHECK(imag_sign(CycloNumber(-1)) == 0);
  CHECK(imag_sign(cyclo(6, 5)) == -1);
  CHECK(imag_sign(cyclo(8, 3)) == 1);
}

TEST_CASE("real and imaginary parts") {
  const CycloNumber xi = cyclo(8, 3);
  CHECK(real_part(xi) + cyclo(4, 1) * imag_part(xi) == xi);
  CHECK(is_real(real_part(xi)));
  CHECK(is_real(imag_part(xi)));
}

TEST_CASE("involution axioms on random elements") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int n1 = 1 + static_cast<int>(rng() % 24);
    const int n2 = 1 + static_cast<int>(rng() % 24);
    const CycloNumber a = random_element(rng, n1);
    const CycloNumber b = random_element(rng, n2);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK(conj(conj(a)) == a);
  }
}

TEST_CASE("sign_real agrees with float evaluation") {
  std::mt19937_64 rng(7);
  int decided = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const CycloNumber a = random_element(rng, n);
    const CycloNumber r = a + conj(a);
    const double approx = r.to_complex().real();
    CHECK(std::abs(r.to_complex().imag()) < 1e-9);
    if (std::abs(approx) > 1e-6) {
      ++decided;
      CHECK(sign_real(r) == (approx > 0 ? 1 : -1));
    }
  }
  CHECK(decided > 300);
}

TEST_CASE("sign_real separates tiny nonzero values") {
  // (2cos(2pi/24))^k approximations: difference of near-equal reals
  const CycloNumber c = cyclo(24, 1) + cyclo(24, -1);
  const CycloNumber d = c - Rational("1931851652578137/1000000000000000");
  CHECK(sign_real(d) == (d.to_complex().real() > 0 ? 1 : -1));
  CHECK(sign_real(d * d * d * d) == 1);
}

TEST_CASE("text form") {
  CHECK(to_string(CycloNumber(Rational(-3, 4))) == "-3/4");
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("12") == Rational(12));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
