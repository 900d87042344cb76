#include "milnor/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) { set(0, CycloNumber(c)); }

LaurentPoly::LaurentPoly(const CycloNumber& c) { set(0, c); }

LaurentPoly LaurentPoly::monomial(const CycloNumber& c, int degree) {
  LaurentPoly p;
  p.set(degree, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<CycloNumber>& coeffs, int lowest) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.set(lowest + static_cast<int>(i), coeffs[i]);
  return p;
}

void LaurentPoly::set(int degree, CycloNumber c) {
  if (c.is_zero()) {
    terms_.erase(degree);
  } else {
    terms_[degree] = std::move(c);
  }
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw DomainError("min_degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw DomainError("max_degree of the zero polynomial");
  return terms_.rbegin()->first;
}

CycloNumber LaurentPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? CycloNumber() : it->second;
}

const CycloNumber& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

const CycloNumber& LaurentPoly::trailing_coeff() const {
  if (terms_.empty()) throw DomainError("trailing coefficient of the zero polynomial");
  return terms_.begin()->second;
}

std::vector<CycloNumber> LaurentPoly::dense() const {
  if (terms_.empty()) return {};
  const int lo = min_degree();
  std::vector<CycloNumber> out(static_cast<std::size_t>(max_degree() - lo + 1));
  for (const auto& [d, c] : terms_) out[static_cast<std::size_t>(d - lo)] = c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [d, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), d + k, c);
  return p;
}

CycloNumber LaurentPoly::evaluate(const CycloNumber& x) const {
  if (terms_.empty()) return CycloNumber();
  if (x.is_zero() && min_degree() < 0) throw DomainError("evaluating a Laurent polynomial with negative degrees at 0");
  // Horner in x from the top, then divide by x^(-min) when needed.
  const int lo = min_degree();
  CycloNumber acc;
  int prev = max_degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (int k = lo; k > 0; --k) acc *= x;
  if (lo < 0) {
    const CycloNumber inv = x.inverse();
    for (int k = lo; k < 0; ++k) acc *= inv;
  }
  return acc;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (const auto& [d, c] : terms_) acc += c.to_complex() * std::pow(x, d);
  return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(da + db, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = it->second.is_zero() ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const CycloNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [d, v] : a.terms_) v = -v;
  return a;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

LaurentPoly invol(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [d, c] : p.terms()) out += LaurentPoly::monomial(conj(c), -d);
  return out;
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly result(1L);
  LaurentPoly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string cs = to_string(c);
    const bool compound = cs.find(' ') != std::string::npos;
    if (d == 0) {
      out << cs;
      continue;
    }
    if (compound) {
      out << "(" << cs << ")*";
    } else if (cs == "-1") {
      out << "-";
    } else if (cs != "1") {
      out << cs << "*";
    }
    out << "t";
    if (d != 1) out << "^" << d;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Division

NormalizedPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("normalize: zero polynomial");
  const int lo = p.min_degree();
  const CycloNumber lead = p.leading_coeff();
  const CycloNumber inv = lead.inverse();
  return NormalizedPoly{p.shifted(-lo) * inv, LaurentPoly::monomial(lead, lo)};
}

LaurentPoly normalized(const LaurentPoly& p) { return normalize(p).normal; }

LaurentPoly unit_inverse(const LaurentPoly& p) {
  if (!p.is_unit()) throw DomainError("unit_inverse: not a unit: " + to_string(p));
  const auto& [d, c] = *p.terms().begin();
  return LaurentPoly::monomial(c.inverse(), -d);
}

namespace {

/// Division in F[t] of dense ascending vectors; b.back() != 0.
void poly_divmod(std::vector<CycloNumber> a, const std::vector<CycloNumber>& b, std::vector<CycloNumber>& q,
                 std::vector<CycloNumber>& r) {
  const std::size_t nb = b.size();
  if (a.size() < nb) {
    q.clear();
    r = std::move(a);
    return;
  }
  q.assign(a.size() - nb + 1, CycloNumber());
  const CycloNumber lead = b.back();
  const bool monic = lead == CycloNumber(1);
  const CycloNumber inv = monic ? CycloNumber(1) : lead.inverse();
  for (std::size_t k = a.size(); k-- >= nb;) {
    if (a[k].is_zero()) continue;
    const CycloNumber f = monic ? a[k] : a[k] * inv;
    const std::size_t shift = k - (nb - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < nb; ++j) {
      if (!b[j].is_zero()) a[shift + j] -= f * b[j];
    }
  }
  a.resize(nb - 1);
  r = std::move(a);
}

/// Remainder of a polynomial (min degree >= 0) modulo d (min degree 0) in F[t].
LaurentPoly poly_rem(const LaurentPoly& x, const LaurentPoly& d) {
  if (x.is_zero()) return x;
  const int lo = x.min_degree();
  std::vector<CycloNumber> a = x.dense();
  a.insert(a.begin(), static_cast<std::size_t>(lo), CycloNumber());
  std::vector<CycloNumber> q, r;
  poly_divmod(std::move(a), d.dense(), q, r);
  return LaurentPoly::from_coeffs(r);
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("divmod: division by zero polynomial");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  const int ma = a.min_degree();
  const int mb = b.min_degree();
  std::vector<CycloNumber> q, r;
  poly_divmod(a.dense(), b.dense(), q, r);
  return {LaurentPoly::from_coeffs(q, ma - mb), LaurentPoly::from_coeffs(r, ma)};
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("exact_divide: " + to_string(b) + " does not divide " + to_string(a));
  return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (b.is_unit()) return true;
  return divmod(a, b).second.is_zero();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a;
  LaurentPoly y = b;
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? LaurentPoly() : normalized(r);
  }
  return x.is_zero() ? x : normalized(x);
}

bool associated(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalized(a) == normalized(b);
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  if (!den_.is_unit()) {
    const LaurentPoly g = gcd(num_, den_);
    if (g.span() > 0) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  auto n = normalize(den_);
  num_ *= unit_inverse(n.unit);
  den_ = std::move(n.normal);
}

RationalFunction RationalFunction::mod_lambda() const {
  if (den_.span() <= 0 || num_.is_zero()) return RationalFunction();
  const LaurentPoly& d = den_;
  const int m = num_.min_degree();
  LaurentPoly r = poly_rem(num_.shifted(-m), d);
  if (m > 0) {
    r = poly_rem(r.shifted(m), d);
  } else if (m < 0) {
    // t^-1 = -(d_1 + d_2 t + ... + d_n t^(n-1)) / d_0 modulo d
    const CycloNumber minus_inv_d0 = -d.trailing_coeff().inverse();
    LaurentPoly t_inv = (d - LaurentPoly(d.trailing_coeff())).shifted(-1) * minus_inv_d0;
    for (int k = m; k < 0; ++k) {
      if (r.is_zero()) break;
      const CycloNumber r0 = r.coeff(0);
      r -= LaurentPoly(r0);
      r = r.shifted(-1);
      if (!r0.is_zero()) r += t_inv * r0;
    }
  }
  RationalFunction out;
  out.num_ = std::move(r);
  out.den_ = d;
  out.reduce();
  return out;
}

CycloNumber RationalFunction::evaluate(const CycloNumber& x) const {
  const CycloNumber d = den_.evaluate(x);
  if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

std::complex<double> RationalFunction::evaluate(std::complex<double> x) const {
  return num_.evaluate(x) / den_.evaluate(x);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

RationalFunction invol(const RationalFunction& f) {
  return RationalFunction(invol(f.numerator()), invol(f.denominator()));
}

bool equal_mod_lambda(const RationalFunction& f, const RationalFunction& g) {
  return (f - g).mod_lambda().is_zero();
}

std::string to_string(const RationalFunction& f) {
  if (f.denominator() == LaurentPoly(1L)) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

// ---------------------------------------------------------------------------
// Basic polynomials

BasicPolynomial basic_poly(const CycloNumber& xi, Flavor flavor) {
  if (!on_unit_circle(xi)) throw DomainError("basic_poly: xi is not on the unit circle: " + to_string(xi));
  BasicPolynomial p;
  p.xi = xi;
  p.flavor = flavor;
  if (flavor == Flavor::Real) {
    if (imag_sign(xi) <= 0) throw DomainError("basic_poly: real flavor requires Im(xi) > 0, got " + to_string(xi));
    p.poly = LaurentPoly::t(1) + LaurentPoly::t(-1) - LaurentPoly(xi + conj(xi));
  } else {
    p.poly = LaurentPoly::t(1) - LaurentPoly(xi);
    p.exceptional = xi == CycloNumber(1) || xi == CycloNumber(-1);
  }
  return p;
}

BasicPolynomial exceptional_poly(int sign_of_xi, Flavor flavor) {
  if (sign_of_xi != 1 && sign_of_xi != -1) throw DomainError("exceptional_poly: sign must be +-1");
  BasicPolynomial p;
  p.xi = CycloNumber(static_cast<long>(sign_of_xi));
  p.flavor = flavor;
  p.poly = LaurentPoly::t(1) - LaurentPoly(static_cast<long>(sign_of_xi));
  p.exceptional = true;
  return p;
}

bool same_basic(const BasicPolynomial& a, const BasicPolynomial& b) {
  if (a.flavor != b.flavor) return false;
  if (a.xi == b.xi) return true;
  return a.flavor == Flavor::Real && a.xi == conj(b.xi);
}

std::string to_string(const BasicPolynomial& p) {
  return "p[" + to_string(p.xi) + "," + to_string(p.flavor) + "] = " + to_string(p.poly);
}

namespace {

int coefficient_order(const LaurentPoly& p) {
  int n = 1;
  for (const auto& [d, c] : p.terms()) n = std::lcm(n, c.order());
  return n;
}

}  // namespace

BasicFactorization factor_basic(const LaurentPoly& p, Flavor flavor, const FactorOptions& opts) {
  if (p.is_zero()) throw DomainError("factor_basic: zero polynomial");
  BasicFactorization out;
  LaurentPoly work = normalized(p);
  const int base_order = coefficient_order(work);
  const int base_phi = euler_phi(base_order);
  LaurentPoly product(1L);

  std::vector<std::pair<int, std::complex<double>>> approx;
  double scale = 0.0;
  auto refresh = [&] {
    approx.clear();
    scale = 0.0;
    for (const auto& [d, c] : work.terms()) {
      approx.emplace_back(d, c.to_complex());
      scale += std::abs(approx.back().second);
    }
  };
  refresh();

  for (int m = 1; m <= opts.max_order && work.span() > 0; ++m) {
    const int extension = euler_phi(std::lcm(base_order, m)) / base_phi;
    if (extension > work.span()) continue;
    for (int k = 0; k < m && work.span() > 0; ++k) {
      if (std::gcd(k, m) != 1) continue;
      // real flavor: one representative per conjugate pair, plus the points +-1
      if (flavor == Flavor::Real && m > 2 && 2 * k > m) continue;

      // cheap float screen before the exact division
      const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
      std::complex<double> value = 0.0;
      for (const auto& [d, c] : approx) value += c * std::pow(z, d);
      if (std::abs(value) > 1e-6 * scale) continue;

      const BasicPolynomial bp = m <= 2 ? exceptional_poly(m == 1 ? 1 : -1, flavor) : basic_poly(cyclo(m, k), flavor);
      int mult = 0;
      while (work.span() > 0) {
        auto [q, r] = divmod(work, bp.poly);
        if (!r.is_zero()) break;
        work = normalized(q);
        product *= bp.poly;
        ++mult;
      }
      if (mult > 0) {
        out.factors.emplace_back(bp, mult);
        refresh();
      }
    }
  }
  out.residual = work;
  out.unit = exact_divide(p, product * work);
  if (!out.unit.is_unit()) throw ConsistencyError("factor_basic: cofactor is not a unit");
  return out;
}

LaurentPoly expand(const BasicFactorization& f) {
  LaurentPoly out = f.unit * f.residual;
  for (const auto& [bp, mult] : f.factors) out *= pow(bp.poly, static_cast<unsigned>(mult));
  return out;
}

// ---------------------------------------------------------------------------
// Matrices over the Laurent ring

LaurentMatrix invol_transpose(const LaurentMatrix& a) {
  LaurentMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = invol(a(i, j));
  return out;
}

LaurentMatrix entrywise_invol(const LaurentMatrix& a) {
  return a.map([](const LaurentPoly& p) { return invol(p); });
}

LaurentPoly determinant(const LaurentMatrix& a) {
  if (!a.square()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return LaurentPoly(1L);
  LaurentMatrix m = a;
  LaurentPoly prev(1L);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return LaurentPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace {

class SmithEngine {
 public:
  explicit SmithEngine(const LaurentMatrix& a)
      : A(a),
        U(LaurentMatrix::identity(a.rows())),
        U_inv(LaurentMatrix::identity(a.rows())),
        W(LaurentMatrix::identity(a.cols())),
        W_inv(LaurentMatrix::identity(a.cols())) {}

  void run() {
    const std::size_t steps = std::min(A.rows(), A.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!settle_pivot(t)) return;
      auto n = normalize(A(t, t));
      if (!(n.unit == LaurentPoly(1L))) scale_row(t, unit_inverse(n.unit), n.unit);
    }
  }

  LaurentMatrix A, U, U_inv, W, W_inv;

 private:
  /// Brings a pivot to (t, t) that divides the remaining block and clears its row and column.
  /// Returns false when the remaining block is zero.
  bool settle_pivot(std::size_t t) {
    for (;;) {
      std::size_t bi = 0, bj = 0;
      int best = -1;
      for (std::size_t i = t; i < A.rows(); ++i) {
        for (std::size_t j = t; j < A.cols(); ++j) {
          const int s = A(i, j).span();
          if (s >= 0 && (best < 0 || s < best)) {
            best = s;
            bi = i;
            bj = j;
          }
        }
      }
      if (best < 0) return false;
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < A.rows(); ++i) {
        if (A(i, t).is_zero()) continue;
        auto [q, r] = divmod(A(i, t), A(t, t));
        add_row_multiple(i, t, -q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < A.cols(); ++j) {
        if (A(t, j).is_zero()) continue;
        auto [q, r] = divmod(A(t, j), A(t, t));
        add_col_multiple(j, t, -q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < A.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < A.cols(); ++j) {
          if (!divides(A(t, t), A(i, j))) {
            add_row_multiple(t, i, LaurentPoly(1L));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(a, j), A(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    for (std::size_t i = 0; i < U_inv.rows(); ++i) std::swap(U_inv(i, a), U_inv(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A(i, a), A(i, b));
    for (std::size_t i = 0; i < W.rows(); ++i) std::swap(W(i, a), W(i, b));
    for (std::size_t j = 0; j < W_inv.cols(); ++j) std::swap(W_inv(a, j), W_inv(b, j));
  }

  /// row_dst += q * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const LaurentPoly& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(src, j).is_zero()) A(dst, j) += q * A(src, j);
    for (std::size_t j = 0; j < U.cols(); ++j)
      if (!U(src, j).is_zero()) U(dst, j) += q * U(src, j);
    // inverse elementary matrix acts on columns from the right: col_src -= q * col_dst
    for (std::size_t i = 0; i < U_inv.rows(); ++i)
      if (!U_inv(i, dst).is_zero()) U_inv(i, src) -= q * U_inv(i, dst);
  }

  /// col_dst += q * col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const LaurentPoly& q) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (!A(i, src).is_zero()) A(i, dst) += q * A(i, src);
    for (std::size_t i = 0; i < W.rows(); ++i)
      if (!W(i, src).is_zero()) W(i, dst) += q * W(i, src);
    for (std::size_t j = 0; j < W_inv.cols(); ++j)
      if (!W_inv(dst, j).is_zero()) W_inv(src, j) -= q * W_inv(dst, j);
  }

  void scale_row(std::size_t r, const LaurentPoly& u, const LaurentPoly& u_inv) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) *= u;
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) *= u;
    for (std::size_t i = 0; i < U_inv.rows(); ++i) U_inv(i, r) *= u_inv;
  }
};

}  // namespace

SmithForm smith_normal_form(const LaurentMatrix& a) {
  SmithEngine engine(a);
  engine.run();
  return SmithForm{std::move(engine.U), std::move(engine.A), std::move(engine.W), std::move(engine.U_inv),
                   std::move(engine.W_inv)};
}

std::vector<LaurentPoly> SmithForm::diagonal() const {
  std::vector<LaurentPoly> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

}  // namespace milnor
