#include <random>

#include "doctest.h"
#include "milnor/isostruct.hpp"
#include "test_support.hpp"

using namespace milnor;

namespace {

using M = Matrix<CycloNumber>;
using Structure = SkewIsometricStructure<CycloNumber>;

const std::pair<int, int> kXiSet[] = {{6, 1}, {5, 1}, {8, 1}, {8, 3}};

CycloNumber random_circle_point(std::mt19937_64& rng) {
  // 12th and 20th roots of unity other than +-1
  for (;;) {
    const int m = rng() % 2 ? 12 : 20;
    const CycloNumber xi = cyclo(m, static_cast<long>(rng() % m));
    if (!(xi == CycloNumber(1)) && !(xi == CycloNumber(-1))) return xi;
  }
}

M random_invertible(std::mt19937_64& rng, std::size_t n, Flavor flavor) {
  std::uniform_int_distribution<long> d(-2, 2);
  for (;;) {
    M p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) = flavor == Flavor::Real ? CycloNumber(d(rng)) : CycloNumber(d(rng)) + d(rng) * cyclo(4, 1);
    if (rank(p) == n) return p;
  }
}

/// Hyperbolic block with t = diag(2, 1/2): no eigenvalues on the circle.
Structure off_circle_block(Flavor flavor) {
  M mu{{0L, 1L}, {-1L, 0L}};
  M t{{2L, 0L}, {0L, CycloNumber(Rational(1, 2))}};
  return Structure::make(mu, t, flavor);
}

struct Generated {
  Structure s;
  std::vector<std::pair<CycloNumber, int>> blocks;  // (xi, sign of the summand)
};

Generated random_structure(std::mt19937_64& rng, Flavor flavor, bool allow_off_circle) {
  Generated g;
  const int count = 1 + static_cast<int>(rng() % 3);
  bool first = true;
  for (int k = 0; k < count; ++k) {
    const CycloNumber xi = random_circle_point(rng);
    const int sign = rng() % 2 ? 1 : -1;
    Structure e = elementary_structure(xi, flavor);
    if (sign < 0) e = negate(e);
    g.s = first ? e : direct_sum(g.s, e);
    first = false;
    g.blocks.emplace_back(xi, sign);
  }
  if (allow_off_circle && rng() % 2) g.s = direct_sum(g.s, off_circle_block(flavor));
  g.s = base_change(g.s, random_invertible(rng, g.s.dim(), flavor));
  return g;
}

}  // namespace

TEST_CASE("elementary structures") {
  const CycloNumber i = cyclo(4, 1);
  const Structure r = elementary_structure(i, Flavor::Real);
  CHECK(r.mu == M{{0L, 1L}, {-1L, 0L}});
  CHECK(r.t == M{{0L, -1L}, {1L, 0L}});
  const Structure c = elementary_structure(i, Flavor::Complex);
  CHECK(c.mu == M{{CycloNumber(2) * i}});
  CHECK(c.t == M{{i}});
  CHECK_THROWS_AS(elementary_structure(CycloNumber(1), Flavor::Real), DomainError);
  CHECK_THROWS_AS(elementary_structure(CycloNumber(-1), Flavor::Complex), DomainError);
  CHECK_THROWS_AS(elementary_structure(CycloNumber(2), Flavor::Complex), DomainError);
}

TEST_CASE("validation rejects malformed structures") {
  CHECK_THROWS_AS(Structure::make(M{{1L}}, M{{1L}}, Flavor::Complex), DomainError);
  CHECK_THROWS_AS(Structure::make(M{{0L, 1L}, {-1L, 0L}}, M{{2L, 0L}, {0L, 1L}}, Flavor::Real), DomainError);
  CHECK_THROWS_AS(Structure::make(M{{0L, 0L}, {0L, 0L}}, M::identity(2), Flavor::Real), DomainError);
}

TEST_CASE("symmetrization of the generators") {
  for (auto [m, k] : kXiSet) {
    const CycloNumber xi = cyclo(m, k);
    const CycloNumber a = xi + conj(xi);
    const M sym_r = symmetrize(elementary_structure(xi, Flavor::Real));
    const M printed{{CycloNumber(-2), a}, {a, CycloNumber(-2)}};
    // differs from [[-2, 2Re xi], [2Re xi, -2]] by the congruence diag(1, -1)
    CHECK(sym_r == congruence(printed, M{{1L, 0L}, {0L, -1L}}));
    CHECK(signature(sym_r).signature() == -2);

    const M sym_c = symmetrize(elementary_structure(xi, Flavor::Complex));
    const CycloNumber im = imag_part(xi);
    CHECK(sym_c == M{{CycloNumber(-imag_sign(xi)) * 4 * im * im}});
  }
  const Structure r = elementary_structure(cyclo(5, 2), Flavor::Real);
  CHECK(is_zero_matrix(symmetrize(Structure{r.mu, M::identity(2), r.flavor})));
}

TEST_CASE("Milnor signatures of the generators") {
  for (auto [m, k] : kXiSet) {
    const CycloNumber xi = cyclo(m, k);
    CHECK(milnor_signature(elementary_structure(xi, Flavor::Real), xi) == -2);
    CHECK(milnor_signature(elementary_structure(xi, Flavor::Complex), xi) == -imag_sign(xi));
    CHECK(total_signature(elementary_structure(xi, Flavor::Real)) == -2);
    // a point whose basic polynomial does not divide char(t)
    CHECK(milnor_signature(elementary_structure(xi, Flavor::Complex), cyclo(7, 1)) == 0);
  }
  const Structure e = elementary_structure(cyclo(6, 1), Flavor::Real);
  CHECK_THROWS_AS(milnor_signature(e, CycloNumber(-1)), DomainError);
  CHECK(total_signature(direct_sum(e, negate(e))) == 0);
}

TEST_CASE("primary decomposition examples") {
  const CycloNumber x1 = cyclo(12, 1), x2 = cyclo(20, 3);
  for (Flavor f : {Flavor::Real, Flavor::Complex}) {
    const Structure e1 = elementary_structure(x1, f);
    const auto d1 = primary_decomposition(e1);
    REQUIRE(d1.parts.size() == 1);
    CHECK(d1.parts[0].xi == x1);
    CHECK(d1.residual_basis.cols() == 0);

    const Structure e2 = elementary_structure(x2, f);
    const auto d2 = primary_decomposition(direct_sum(e1, e2));
    REQUIRE(d2.parts.size() == 2);
    const std::size_t n1 = e1.dim();
    for (const auto& part : d2.parts) {
      // each part lies in exactly one summand
      const bool first = part.xi == x1;
      for (std::size_t i = 0; i < part.basis.rows(); ++i)
        for (std::size_t j = 0; j < part.basis.cols(); ++j)
          if ((i < n1) != first) CHECK(is_zero(part.basis(i, j)));
      CHECK(part.dim() == n1);
    }

    const auto d3 = primary_decomposition(off_circle_block(f));
    CHECK(d3.parts.empty());
    CHECK(d3.residual_basis.cols() == 2);
  }
}

TEST_CASE("exceptional points are reported by dimension") {
  // t = [[1, 1], [0, 1]] preserves [[0, 1], [-1, 0]]
  const Structure s = Structure::make(M{{0L, 1L}, {-1L, 0L}}, M{{1L, 1L}, {0L, 1L}}, Flavor::Real);
  const auto d = primary_decomposition(s);
  CHECK(d.parts.empty());
  CHECK(d.dim_plus_one == 2);
  CHECK(d.dim_minus_one == 0);
  CHECK(total_signature(s) == 1);  // symmetrization [[0, 0], [0, 2]] is singular
}

TEST_CASE("structural properties on generated structures") {
  std::mt19937_64 rng(8128);
  for (int trial = 0; trial < 40; ++trial) {
    const Flavor flavor = trial % 2 ? Flavor::Real : Flavor::Complex;
    const Generated g = random_structure(rng, flavor, true);
    CHECK_NOTHROW(g.s.validate());
    const auto dec = primary_decomposition(g.s);
    CHECK(parts_orthogonal(g.s, dec));
    int sum = 0;
    for (const auto& part : dec.parts) {
      CHECK_NOTHROW(part.structure.validate());
      const int a = milnor_signature(g.s, part.xi);
      CHECK(a == milnor_signature_by_restriction(g.s, part.xi));
      // expected from the generators: -2 (real) or -sign(Im xi) (complex) per block
      int expect = 0;
      for (const auto& [xi, sign] : g.blocks) {
        const bool same = xi == part.xi || (flavor == Flavor::Real && conj(xi) == part.xi);
        if (!same) continue;
        expect += sign * (flavor == Flavor::Real ? -2 : -imag_sign(xi));
      }
      CHECK(a == expect);
      sum += a;
    }
    if (dec.residual_basis.cols() == 0) CHECK(sum == total_signature(g.s));
  }
}

TEST_CASE("Milnor signatures are base-change invariant and additive") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const Flavor flavor = trial % 2 ? Flavor::Real : Flavor::Complex;
    const Generated a = random_structure(rng, flavor, false);
    const Generated b = random_structure(rng, flavor, false);
    const Structure sum = direct_sum(a.s, b.s);
    const Structure moved = base_change(sum, random_invertible(rng, sum.dim(), flavor));
    for (const auto& [xi, sign] : a.blocks) {
      const int direct = milnor_signature(a.s, xi) + milnor_signature(b.s, xi);
      CHECK(milnor_signature(sum, xi) == direct);
      CHECK(milnor_signature(moved, xi) == direct);
    }
  }
}

TEST_CASE("float backend reproduces exact Milnor signatures") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Flavor flavor = trial % 2 ? Flavor::Real : Flavor::Complex;
    const Generated g = random_structure(rng, flavor, true);
    const auto f = to_float(g.s);
    std::vector<ApproxComplex> candidates;
    for (const auto& [xi, sign] : g.blocks) {
      CHECK(milnor_signature(f, ApproxComplex(xi)) == milnor_signature(g.s, xi));
      candidates.emplace_back(xi);
    }
    CHECK(total_signature(f) == total_signature(g.s));
    const auto dec = primary_decomposition(f, candidates);
    CHECK(parts_orthogonal(f, dec));
  }
  // a non-root-of-unity point on the circle
  const std::complex<double> w = std::polar(1.0, 1.0);
  const auto e = elementary_structure(ApproxComplex(w), Flavor::Real);
  CHECK(milnor_signature(e, ApproxComplex(w)) == -2);
  const auto c = elementary_structure(ApproxComplex(std::conj(w)), Flavor::Complex);
  CHECK(milnor_signature(c, ApproxComplex(std::conj(w))) == 1);
}

TEST_CASE("characteristic-polynomial screen agrees with the kernel computation") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 16; ++trial) {
    const Flavor flavor = trial % 2 ? Flavor::Real : Flavor::Complex;
    const Generated g = random_structure(rng, flavor, true);
    const LaurentPoly char_t = characteristic_laurent(g.s.t);
    std::vector<CycloNumber> points{cyclo(7, 1), cyclo(24, 5)};
    for (const auto& [xi, sign] : g.blocks) {
      points.push_back(xi);
      points.push_back(conj(xi));
    }
    for (const auto& xi : points) CHECK(milnor_signature(g.s, xi, char_t) == milnor_signature(g.s, xi));
  }
  const Structure e = elementary_structure(cyclo(6, 1), Flavor::Real);
  CHECK_THROWS_AS(milnor_signature(e, CycloNumber(-1), characteristic_laurent(e.t)), DomainError);
}
