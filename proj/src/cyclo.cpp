#include "milnor/cyclo.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw ParseError("invalid rational '" + std::string(text) + "'");
    }
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("invalid rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Per-order tables: Phi_N and x^j mod Phi_N for every exponent arithmetic needs.
struct CycloContext {
  int order = 1;
  int phi = 1;
  std::vector<long> phi_poly;
  std::vector<std::vector<long>> powers;  // powers[j] = x^j mod Phi_N, j < max(N, 2 phi - 1)
};

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(den.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
      long q = num[k + dd];  // den is monic
      quot[k] = q;
      for (int j = 0; j <= dd; ++j) num[k + j] -= q * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

std::shared_ptr<const CycloContext> build_context(int n) {
  auto ctx = std::make_shared<CycloContext>();
  ctx->order = n;
  ctx->phi = euler_phi(n);
  ctx->phi_poly = cyclotomic_polynomial(n);
  const int phi = ctx->phi;
  const int count = std::max(n, 2 * phi - 1);
  ctx->powers.reserve(count);
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int j = 0; j < count; ++j) {
    ctx->powers.push_back(cur);
    // multiply by x and reduce the overflow coefficient with the monic Phi_N
    long top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] -= top * ctx->phi_poly[i];
    }
  }
  return ctx;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<const CycloContext> context(int n) {
  static std::map<int, std::shared_ptr<const CycloContext>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto ctx = build_context(n);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(ctx)).first->second;
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

// acc += scale * (x^exponent mod Phi_N)
void add_scaled_power(std::vector<mpz_class>& acc, const CycloContext& ctx, long exponent,
                      const mpz_class& scale) {
  const auto& pw = ctx.powers[exponent];
  for (int i = 0; i < ctx.phi; ++i) {
    const long c = pw[i];
    if (c > 0) {
      mpz_addmul_ui(acc[i].get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(c));
    } else if (c < 0) {
      mpz_submul_ui(acc[i].get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(-c));
    }
  }
}

bool all_zero(const std::vector<mpz_class>& v, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return false;
  return true;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
  static std::map<int, std::vector<long>> cache;
  static std::recursive_mutex m;
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<long> poly = (n == 1) ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

CycloNumber::CycloNumber() : order_(1), num_(1), den_(1) {}

CycloNumber::CycloNumber(long value) : order_(1), num_(1, mpz_class(value)), den_(1) {}

CycloNumber::CycloNumber(const Rational& value) : order_(1), num_(1), den_(1) {
  Rational v = value;
  v.canonicalize();
  num_[0] = v.get_num();
  den_ = v.get_den();
}

CycloNumber::CycloNumber(int order, std::vector<Rational> coeffs) : order_(order), den_(1) {
  if (order < 1) throw DomainError("cyclotomic order must be >= 1");
  if (static_cast<int>(coeffs.size()) != euler_phi(order)) {
    throw DomainError("coefficient vector of order " + std::to_string(order) + " must have length " +
                      std::to_string(euler_phi(order)));
  }
  for (auto& c : coeffs) {
    c.canonicalize();
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), c.get_den_mpz_t());
  }
  num_.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) num_[i] = coeffs[i].get_num() * (den_ / coeffs[i].get_den());
  normalize();
}

CycloNumber::CycloNumber(int order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycloNumber::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  if (all_zero(num_)) {
    den_ = 1;
    return;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

std::vector<Rational> CycloNumber::coeffs() const {
  std::vector<Rational> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i] = Rational(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

Rational CycloNumber::constant_coeff() const {
  Rational r(num_.front(), den_);
  r.canonicalize();
  return r;
}

CycloNumber CycloNumber::root_of_unity(int order, long exponent) {
  if (order < 1) throw DomainError("cyclo: invalid order " + std::to_string(order));
  auto ctx = context(order);
  long e = exponent % order;
  if (e < 0) e += order;
  std::vector<mpz_class> c(ctx->phi);
  add_scaled_power(c, *ctx, e, mpz_class(1));
  return CycloNumber(order, std::move(c), mpz_class(1));
}

bool CycloNumber::is_zero() const { return all_zero(num_); }

bool CycloNumber::is_rational() const { return all_zero(num_, 1); }

CycloNumber CycloNumber::promoted(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order < 1 || new_order % order_ != 0) {
    throw DomainError("cannot promote order " + std::to_string(order_) + " to " +
                      std::to_string(new_order));
  }
  auto ctx = context(new_order);
  std::vector<mpz_class> c(ctx->phi);
  const long step = new_order / order_;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (sgn(num_[k]) != 0) add_scaled_power(c, *ctx, static_cast<long>(k) * step, num_[k]);
  }
  return CycloNumber(new_order, std::move(c), den_);
}

namespace {

// a/da + sign * b/db with equal lengths, written into (a, da).
void add_fractions(std::vector<mpz_class>& a, mpz_class& da, const std::vector<mpz_class>& b,
                   const mpz_class& db, bool subtract) {
  if (da == db) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (subtract) a[i] -= b[i];
      else a[i] += b[i];
    }
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  const mpz_class scale_a = db / g;
  const mpz_class scale_b = da / g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] *= scale_a;
    if (sgn(b[i]) == 0) continue;
    if (subtract) mpz_submul(a[i].get_mpz_t(), b[i].get_mpz_t(), scale_b.get_mpz_t());
    else mpz_addmul(a[i].get_mpz_t(), b[i].get_mpz_t(), scale_b.get_mpz_t());
  }
  da *= scale_a;
}

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
  if (rhs.order_ != order_) {
    if (rhs.is_rational()) {
      std::vector<mpz_class> r(num_.size());
      r[0] = rhs.num_[0];
      add_fractions(num_, den_, r, rhs.den_, false);
      normalize();
      return *this;
    }
    const int l = lcm_order(order_, rhs.order_);
    *this = promoted(l);
    return *this += rhs.promoted(l);
  }
  add_fractions(num_, den_, rhs.num_, rhs.den_, false);
  normalize();
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
  if (rhs.order_ != order_) {
    const int l = lcm_order(order_, rhs.order_);
    *this = promoted(l);
    return *this -= rhs.promoted(l);
  }
  add_fractions(num_, den_, rhs.num_, rhs.den_, true);
  normalize();
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
  if (rhs.is_rational()) {
    const mpz_class p = rhs.num_[0], q = rhs.den_;
    for (auto& c : num_) c *= p;
    den_ *= q;
    normalize();
    return *this;
  }
  if (is_rational()) {
    const mpz_class p = num_[0], q = den_;
    *this = rhs;
    for (auto& c : num_) c *= p;
    den_ *= q;
    normalize();
    return *this;
  }
  if (rhs.order_ != order_) {
    const int l = lcm_order(order_, rhs.order_);
    *this = promoted(l);
    return *this *= rhs.promoted(l);
  }
  auto ctx = context(order_);
  const int phi = ctx->phi;
  std::vector<mpz_class> raw(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (sgn(num_[i]) == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (sgn(rhs.num_[j]) != 0) mpz_addmul(raw[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  // x^phi = -sum_{i < phi} Phi_i x^i, applied from the top degree down
  const auto& cp = ctx->phi_poly;
  for (int d = 2 * phi - 2; d >= phi; --d) {
    if (sgn(raw[d]) == 0) continue;
    for (int i = 0; i < phi; ++i) {
      const long c = cp[i];
      if (c > 0) {
        mpz_submul_ui(raw[d - phi + i].get_mpz_t(), raw[d].get_mpz_t(), static_cast<unsigned long>(c));
      } else if (c < 0) {
        mpz_addmul_ui(raw[d - phi + i].get_mpz_t(), raw[d].get_mpz_t(), static_cast<unsigned long>(-c));
      }
    }
  }
  raw.resize(phi);
  num_ = std::move(raw);
  den_ *= rhs.den_;
  normalize();
  return *this;
}

CycloNumber CycloNumber::galois(long k) const {
  if (is_rational()) return *this;
  const long n = order_;
  long e = k % n;
  if (e < 0) e += n;
  if (std::gcd(e, n) != 1) throw DomainError("galois: exponent is not coprime to the order");
  auto ctx = context(order_);
  std::vector<mpz_class> c(ctx->phi);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) != 0) add_scaled_power(c, *ctx, (static_cast<long>(j) * e) % n, num_[j]);
  }
  return CycloNumber(order_, std::move(c), den_);
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (is_rational()) {
    CycloNumber r = *this;
    r.num_[0] = den_;
    r.den_ = num_[0];
    r.normalize();
    return r;
  }
  // 1/a = (product of the other conjugates) / norm(a)
  CycloNumber others(1L);
  for (long k = 2; k < order_; ++k) {
    if (std::gcd(k, static_cast<long>(order_)) == 1) others *= galois(k);
  }
  const CycloNumber norm = *this * others;
  if (!norm.is_rational()) throw ConsistencyError("cyclotomic norm is not rational");
  return others * CycloNumber(Rational(norm.den_, norm.num_[0]));
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& rhs) { return *this *= rhs.inverse(); }

CycloNumber operator-(CycloNumber a) {
  for (auto& c : a.num_) c = -c;
  return a;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  const bool ra = a.is_rational(), rb = b.is_rational();
  if (ra != rb) return false;
  if (ra) return a.den_ == b.den_ && a.num_[0] == b.num_[0];
  const int l = std::lcm(a.order_, b.order_);
  return a.promoted(l) == b.promoted(l);
}

std::complex<double> CycloNumber::to_complex() const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (sgn(num_[k]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
    sum += Rational(num_[k], den_).get_d() * std::polar(1.0, angle);
  }
  return sum;
}

CycloNumber cyclo(int order, long exponent) { return CycloNumber::root_of_unity(order, exponent); }

CycloNumber conj(const CycloNumber& z) {
  if (z.is_rational()) return z;
  return z.galois(z.order() - 1);
}

bool is_real(const CycloNumber& z) { return z.is_rational() || conj(z) == z; }

CycloNumber real_part(const CycloNumber& z) { return (z + conj(z)) * CycloNumber(Rational(1, 2)); }

CycloNumber imag_part(const CycloNumber& z) {
  // (z - conj z) / (2i) = -i (z - conj z) / 2
  const CycloNumber minus_half_i = cyclo(4, 1) * CycloNumber(Rational(-1, 2));
  return (z - conj(z)) * minus_half_i;
}

bool on_unit_circle(const CycloNumber& z) { return z * conj(z) == CycloNumber(1); }

namespace {

// RAII holder for an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

int sign_real(const CycloNumber& z) {
  if (!is_real(z)) throw DomainError("sign_real: element is not real: " + to_string(z));
  if (z.is_zero()) return 0;
  if (z.is_rational()) return sgn(z.constant_coeff());

  const int n = z.order();
  // den > 0, so the numerators carry the sign
  const auto& c = z.numerators();
  const int phi = static_cast<int>(c.size());
  mpz_class abs_sum = 0;
  for (const auto& q : c) abs_sum += abs(q);

  // Error of the evaluation below is at most abs_sum * (phi + 16) * 2^(8 - prec).
  constexpr mpfr_prec_t kStartPrecision = 64;
  constexpr mpfr_prec_t kGiveUpPrecision = mpfr_prec_t{1} << 18;
  for (mpfr_prec_t prec = kStartPrecision; prec <= kGiveUpPrecision; prec *= 2) {
    MpfrValue pi(prec), arg(prec), term(prec), acc(prec), bound(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_set_zero(acc.get(), 1);
    for (int k = 0; k < phi; ++k) {
      if (c[k] == 0) continue;
      mpfr_mul_si(arg.get(), pi.get(), 2L * k, MPFR_RNDN);
      mpfr_div_si(arg.get(), arg.get(), n, MPFR_RNDN);
      mpfr_cos(term.get(), arg.get(), MPFR_RNDN);
      mpfr_mul_z(term.get(), term.get(), c[k].get_mpz_t(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    }
    mpfr_set_z(bound.get(), abs_sum.get_mpz_t(), MPFR_RNDU);
    mpfr_mul_si(bound.get(), bound.get(), phi + 16, MPFR_RNDU);
    mpfr_mul_2si(bound.get(), bound.get(), 8 - static_cast<long>(prec), MPFR_RNDU);
    if (mpfr_cmpabs(acc.get(), bound.get()) > 0) return mpfr_sgn(acc.get()) > 0 ? 1 : -1;
  }
  throw DomainError("sign_real: failed to separate a nonzero element from zero");
}

int imag_sign(const CycloNumber& z) { return sign_real(imag_part(z)); }

std::string to_string(const CycloNumber& z) {
  if (z.is_rational()) return to_string(z.constant_coeff());
  std::ostringstream out;
  bool first = true;
  const std::vector<Rational> coeffs = z.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Rational a = abs(c);
    if (k == 0) {
      out << to_string(a);
      continue;
    }
    if (a != 1) out << to_string(a) << "*";
    out << "z" << z.order();
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace milnor
