#include <random>

#include "doctest.h"
#include "milnor/linalg.hpp"

using namespace milnor;

namespace {

using M = Matrix<CycloNumber>;

M random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int order) {
  M m(r, c);
  std::uniform_int_distribution<long> d(-3, 3);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = CycloNumber(d(rng)) + d(rng) * cyclo(order, 1);
  return m;
}

/// Leibniz expansion; independent of elimination.
CycloNumber leibniz_det(const M& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  CycloNumber total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    CycloNumber term(inversions % 2 == 0 ? 1L : -1L);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

CycloNumber eval_poly(const std::vector<CycloNumber>& p, const CycloNumber& x) {
  CycloNumber acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST_CASE("rank, kernel and inverse") {
  const M a{{1L, 2L, 3L}, {2L, 4L, 6L}, {1L, 0L, 1L}};
  CHECK(rank(a) == 2);
  const M k = kernel(a);
  CHECK(k.cols() == 1);
  CHECK(is_zero_matrix(a * k));
  CHECK_THROWS_AS(inverse(a), DomainError);
  const M b{{2L, 1L}, {1L, 1L}};
  CHECK(inverse(b) * b == M::identity(2));
}

TEST_CASE("determinant matches Leibniz expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const M m = random_matrix(rng, n, n, 1 + static_cast<int>(rng() % 12));
    CHECK(determinant(m) == leibniz_det(m));
  }
}

TEST_CASE("characteristic polynomial matches det(xI - m) at sample points") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const M m = random_matrix(rng, n, n, 8);
    const auto p = characteristic_polynomial(m);
    REQUIRE(p.size() == n + 1);
    CHECK(p.back() == CycloNumber(1));
    for (long x : {-2L, 0L, 3L}) {
      const M shifted = M::identity(n) * CycloNumber(x) - m;
      CHECK(eval_poly(p, CycloNumber(x)) == leibniz_det(shifted));
    }
  }
}

TEST_CASE("characteristic polynomial with zero subdiagonal") {
  const M m{{1L, 0L, 0L}, {0L, 2L, 0L}, {0L, 0L, 3L}};
  const auto p = characteristic_polynomial(m);
  CHECK(p == std::vector<CycloNumber>{CycloNumber(-6), CycloNumber(11), CycloNumber(-6), CycloNumber(1)});
}

TEST_CASE("solve_in_span") {
  const M basis{{1L, 0L}, {1L, 1L}, {0L, 1L}};
  const M x{{2L}, {-1L}};
  CHECK(solve_in_span(basis, basis * x) == x);
  const M outside{{1L}, {0L}, {0L}};
  CHECK_THROWS_AS(solve_in_span(basis, outside), DomainError);
}

TEST_CASE("float backend elimination") {
  using F = ApproxComplex;
  Matrix<F> a(2, 2);
  a(0, 0) = F(std::complex<double>(1e-12, 0));
  a(0, 1) = 1L;
  a(1, 0) = 1L;
  a(1, 1) = F(std::complex<double>(0, 1));
  CHECK(rank(a) == 2);
  const auto inv = inverse(a);
  const auto prod = inv * a;
  CHECK(prod(0, 0) == F(1L));
  CHECK(is_zero(prod(0, 1)));
  Matrix<F> s(2, 2);
  s(0, 0) = 1L;
  s(0, 1) = 1L;
  s(1, 0) = 1L;
  s(1, 1) = F(std::complex<double>(1.0 + 1e-12, 0));
  CHECK(rank(s) == 1);
}
