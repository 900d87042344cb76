#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "milnor/errors.hpp"
#include "milnor/laurent.hpp"

using namespace milnor;

namespace {

const LaurentPoly t = LaurentPoly::t();

LaurentPoly random_laurent(std::mt19937_64& rng, int order, int lo, int hi) {
  std::uniform_int_distribution<long> d(-3, 3);
  LaurentPoly p;
  for (int k = lo; k <= hi; ++k) p += LaurentPoly::monomial(CycloNumber(d(rng)) + d(rng) * cyclo(order, 1), k);
  return p;
}

bool is_lambda_unit_matrix_det(const LaurentMatrix& m) { return determinant(m).is_unit(); }

}  // namespace

TEST_CASE("involution examples") {
  const CycloNumber i = cyclo(4, 1);
  CHECK(invol(t) == LaurentPoly::t(-1));
  CHECK(invol(LaurentPoly(i) + LaurentPoly::monomial(2, 3)) == LaurentPoly(-i) + LaurentPoly::monomial(2, -3));
  for (int m : {5, 6, 8, 12}) {
    const BasicPolynomial p = basic_poly(cyclo(m, 1), Flavor::Real);
    CHECK(invol(p.poly) == p.poly);
  }
}

TEST_CASE("basic polynomials") {
  CHECK(basic_poly(cyclo(4, 1), Flavor::Real).poly == t + LaurentPoly::t(-1));
  CHECK(basic_poly(cyclo(6, 1), Flavor::Real).poly == t - LaurentPoly(1L) + LaurentPoly::t(-1));
  CHECK(basic_poly(cyclo(6, 1), Flavor::Complex).poly == t - LaurentPoly(cyclo(6, 1)));
  CHECK_THROWS_AS(basic_poly(CycloNumber(2), Flavor::Complex), DomainError);
  CHECK_THROWS_AS(basic_poly(cyclo(6, 5), Flavor::Real), DomainError);
  CHECK(basic_poly(CycloNumber(-1), Flavor::Complex).exceptional);
}

TEST_CASE("basic polynomials are weakly symmetric") {
  for (int m = 3; m <= 24; ++m) {
    for (int k = 1; k < m; ++k) {
      const CycloNumber xi = cyclo(m, k);
      for (Flavor f : {Flavor::Real, Flavor::Complex}) {
        if (f == Flavor::Real && imag_sign(xi) <= 0) continue;
        const LaurentPoly p = basic_poly(xi, f).poly;
        const auto [u, r] = divmod(invol(p), p);
        REQUIRE(r.is_zero());
        REQUIRE(u.is_unit());
        CHECK(u * invol(u) == LaurentPoly(1L));
      }
    }
  }
}

TEST_CASE("involution is a ring involution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_laurent(rng, 12, -2, 3);
    const LaurentPoly b = random_laurent(rng, 5, -1, 2);
    CHECK(invol(a * b) == invol(a) * invol(b));
    CHECK(invol(a + b) == invol(a) + invol(b));
    CHECK(invol(invol(a)) == a);
  }
}

TEST_CASE("division and gcd") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const LaurentPoly a = random_laurent(rng, 8, -3, 4);
    LaurentPoly b = random_laurent(rng, 8, -1, 1);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.span() < b.span());
    const LaurentPoly c = random_laurent(rng, 3, 0, 2);
    if (c.is_zero() || a.is_zero()) continue;
    const LaurentPoly g = gcd(a * c, b * c);
    CHECK(divides(c, g));
    CHECK(divides(g, a * c));
    CHECK(divides(g, b * c));
  }
  CHECK_THROWS_AS(exact_divide(t + LaurentPoly(1L), t - LaurentPoly(1L)), DomainError);
}

TEST_CASE("rational functions modulo the Laurent ring") {
  const RationalFunction f(LaurentPoly(1L), LaurentPoly(1L) - t);
  // adding a Laurent polynomial does not change the class
  const RationalFunction g = f + RationalFunction(LaurentPoly::t(-3) + LaurentPoly(7L));
  CHECK(f.mod_lambda() == g.mod_lambda());
  CHECK(equal_mod_lambda(f, g));
  // the class of t^-5/(t-2) has a representative c/(t-2) with constant c = 2^-5
  const RationalFunction h(LaurentPoly::t(-5), t - LaurentPoly(2L));
  CHECK(h.mod_lambda() == RationalFunction(LaurentPoly(CycloNumber(Rational(1, 32))), t - LaurentPoly(2L)));
  CHECK(RationalFunction(t * t, t).is_laurent());
  CHECK_THROWS_AS(RationalFunction(LaurentPoly(1L), LaurentPoly()), DomainError);
  const CycloNumber x = cyclo(5, 2);
  CHECK(h.evaluate(x) == LaurentPoly::t(-5).evaluate(x) / (x - 2));
}

TEST_CASE("factor_basic examples") {
  const auto f1 = factor_basic(t - LaurentPoly(1L) + LaurentPoly::t(-1), Flavor::Real);
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factors[0].first.xi == cyclo(6, 1));
  CHECK(f1.factors[0].second == 1);
  CHECK(f1.residual == LaurentPoly(1L));

  const CycloNumber i = cyclo(4, 1);
  const LaurentPoly p = pow(t - LaurentPoly(i), 2) * (t + LaurentPoly(i));
  const auto f2 = factor_basic(p, Flavor::Complex);
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0].first.xi == i);
  CHECK(f2.factors[0].second == 2);
  CHECK(f2.factors[1].first.xi == -i);
  CHECK(f2.factors[1].second == 1);

  const auto f3 = factor_basic(t - LaurentPoly(2L), Flavor::Complex);
  CHECK(f3.factors.empty());
  CHECK(f3.residual == t - LaurentPoly(2L));
}

TEST_CASE("factor_basic finds roots outside the coefficient field") {
  // t^2 + t + 1 over Q has roots zeta_3^{+-1}
  const LaurentPoly p = t * t + t + LaurentPoly(1L);
  const auto f = factor_basic(p, Flavor::Complex);
  CHECK(f.factors.size() == 2);
  CHECK(expand(f) == p);
  // Alexander polynomial of the figure-eight knot has no roots on the circle
  const auto g = factor_basic(t * t - LaurentPoly(3L) * t + LaurentPoly(1L), Flavor::Real);
  CHECK(g.factors.empty());
}

TEST_CASE("factor_basic expansion reproduces the input") {
  std::mt19937_64 rng(99);
  const int orders[] = {5, 6, 8, 12, 20};
  for (int trial = 0; trial < 40; ++trial) {
    const Flavor flavor = trial % 2 == 0 ? Flavor::Real : Flavor::Complex;
    LaurentPoly p = LaurentPoly::monomial(CycloNumber(3), static_cast<int>(rng() % 5) - 2);
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < count; ++c) {
      const int m = orders[rng() % 5];
      const int k = 1 + static_cast<int>(rng() % (m / 2 - 1 > 0 ? m / 2 - 1 : 1));
      const CycloNumber xi = cyclo(m, k);
      if (imag_sign(xi) <= 0) continue;
      p *= pow(basic_poly(xi, flavor).poly, 1 + static_cast<unsigned>(rng() % 2));
    }
    p *= t - LaurentPoly(3L);
    const auto f = factor_basic(p, flavor);
    CHECK(expand(f) == p);
    CHECK(f.residual == t - LaurentPoly(3L));
    CHECK(f.unit.is_unit());
  }
}

TEST_CASE("smith normal form examples") {
  const LaurentMatrix id = LaurentMatrix::identity(2);
  CHECK(smith_normal_form(id).D == id);

  LaurentMatrix a(2, 2);
  a(0, 0) = t - LaurentPoly(1L);
  a(1, 1) = (t - LaurentPoly(1L)) * (t + LaurentPoly(1L));
  const auto s = smith_normal_form(a);
  CHECK(s.diagonal()[0] == t - LaurentPoly(1L));
  CHECK(s.diagonal()[1] == t * t - LaurentPoly(1L));

  LaurentMatrix b(2, 2);
  b(0, 0) = t;
  b(0, 1) = LaurentPoly(1L);
  b(1, 1) = t;
  // t is a unit of the Laurent ring, so the determinant t^2 normalizes to 1
  const auto sb = smith_normal_form(b);
  CHECK(sb.diagonal()[0] == LaurentPoly(1L));
  CHECK(sb.diagonal()[1] == LaurentPoly(1L));

  LaurentMatrix c(2, 2);
  c(0, 0) = t - LaurentPoly(1L);
  c(0, 1) = LaurentPoly(1L);
  c(1, 1) = t - LaurentPoly(1L);
  const auto sc = smith_normal_form(c);
  CHECK(sc.diagonal()[0] == LaurentPoly(1L));
  CHECK(sc.diagonal()[1] == pow(t - LaurentPoly(1L), 2));
}

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    LaurentMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_laurent(rng, 6, -1, 1);
    const auto s = smith_normal_form(a);
    CHECK(s.U * a * s.W == s.D);
    CHECK(s.U * s.U_inv == LaurentMatrix::identity(n));
    CHECK(s.W * s.W_inv == LaurentMatrix::identity(n));
    CHECK(is_lambda_unit_matrix_det(s.U));
    CHECK(is_lambda_unit_matrix_det(s.W));
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (!d[i + 1].is_zero()) CHECK(divides(d[i], d[i + 1]));
    }
    const LaurentPoly det_a = determinant(a);
    const LaurentPoly det_d = determinant(s.D);
    CHECK(associated(det_a, det_d));
  }
}

TEST_CASE("smith normal form of rectangular matrices") {
  LaurentMatrix a(2, 3);
  a(0, 0) = t - LaurentPoly(1L);
  a(0, 2) = t + LaurentPoly(1L);
  a(1, 1) = LaurentPoly(2L) * t;
  const auto s = smith_normal_form(a);
  CHECK(s.U * a * s.W == s.D);
  CHECK(s.diagonal()[0] == LaurentPoly(1L));
  CHECK(s.diagonal()[1] == LaurentPoly(1L));
}
