#include "milnor/linkforms.hpp"

#include <sstream>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

bool has_real_coefficients(const LaurentPoly& p) {
  for (const auto& [deg, c] : p.terms())
    if (!is_real(c)) return false;
  return true;
}

bool has_real_coefficients(const RationalFunction& f) {
  return has_real_coefficients(f.numerator()) && has_real_coefficients(f.denominator());
}

RationalMatrix to_rational(const LaurentMatrix& m) {
  return m.map([](const LaurentPoly& p) { return RationalFunction(p); });
}

RationalMatrix entrywise_invol(const RationalMatrix& m) {
  return m.map([](const RationalFunction& f) { return invol(f); });
}

// H split along the Smith form of P: summand a is Lambda/(divisor[a]) generated
// by column index[a] of U^-1; gram holds lambda on these generators mod Lambda.
struct SplitModule {
  LaurentMatrix u_inv;
  std::vector<std::size_t> index;
  std::vector<LaurentPoly> divisor;
  RationalMatrix gram;
};

SplitModule split_module(const LinkingForm& l) {
  const std::size_t n = l.relations.rows();
  SmithForm snf = smith_normal_form(l.relations);
  SplitModule s;
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly& d = snf.D(i, i);
    if (d.is_zero()) throw DomainError("linking form: presentation is singular (module is not torsion)");
    if (d.is_unit()) continue;
    s.index.push_back(i);
    s.divisor.push_back(normalized(d));
  }
  s.u_inv = std::move(snf.U_inv);
  const std::size_t k = s.index.size();
  // row a: (U^-1 e_a)^T G
  RationalMatrix left(k, n);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t col = 0; col < n; ++col) {
      RationalFunction acc;
      for (std::size_t r = 0; r < n; ++r) {
        const LaurentPoly& x = s.u_inv(r, s.index[a]);
        if (!x.is_zero() && !l.gram(r, col).is_zero()) acc += RationalFunction(x) * l.gram(r, col);
      }
      left(a, col) = acc;
    }
  s.gram = RationalMatrix(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      RationalFunction acc;
      for (std::size_t col = 0; col < n; ++col) {
        const LaurentPoly& y = s.u_inv(col, s.index[b]);
        if (!y.is_zero() && !left(a, col).is_zero()) acc += left(a, col) * RationalFunction(invol(y));
      }
      s.gram(a, b) = acc.mod_lambda();
    }
  return s;
}

SkewIsometricStructure<CycloNumber> pushforward(const SplitModule& s, Flavor flavor) {
  std::vector<std::size_t> offset;
  std::size_t dim = 0;
  for (const auto& d : s.divisor) {
    offset.push_back(dim);
    dim += static_cast<std::size_t>(d.span());
  }
  Matrix<CycloNumber> mu(dim, dim), t(dim, dim);
  const std::size_t k = s.divisor.size();
  for (std::size_t a = 0; a < k; ++a) {
    const int da = s.divisor[a].span();
    for (std::size_t b = 0; b < k; ++b) {
      const int db = s.divisor[b].span();
      // lambda(t^i e_a, t^j e_b) = t^(i-j) gram(a, b)
      const auto shifts = trace_chi_shifts(s.gram(a, b), -(db - 1), da - 1);
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) mu(offset[a] + i, offset[b] + j) = shifts[i - j + db - 1];
    }
    for (int i = 0; i + 1 < da; ++i) t(offset[a] + i + 1, offset[a] + i) = CycloNumber(1);
    for (int i = 0; i < da; ++i) t(offset[a] + i, offset[a] + da - 1) = -s.divisor[a].coeff(i);
  }
  try {
    return SkewIsometricStructure<CycloNumber>::make(std::move(mu), std::move(t), flavor);
  } catch (const DomainError& e) {
    throw DomainError(std::string("chi-pushforward: ") + e.what());
  }
}

CycloNumber flavor_point(const CycloNumber& xi, Flavor flavor) {
  if (flavor == Flavor::Real && imag_sign(xi) < 0) return conj(xi);
  return xi;
}

void check_jump_point(const CycloNumber& xi) {
  if (!on_unit_circle(xi)) throw DomainError("signature_jump: xi is not on the unit circle: " + to_string(xi));
  if (xi == CycloNumber(1) || xi == CycloNumber(-1)) throw DomainError("signature_jump: xi = +-1 is excluded");
}

// Devissage on the p-primary part, available when that part is p-torsion.
std::optional<int> devissage_jump(const SplitModule& s, const CycloNumber& xi_in, Flavor flavor) {
  const CycloNumber xi = flavor_point(xi_in, flavor);
  const BasicPolynomial p = basic_poly(xi, flavor);
  const LaurentPoly pn = normalized(p.poly);
  std::vector<std::size_t> members;
  std::vector<LaurentPoly> cofactor;
  for (std::size_t a = 0; a < s.divisor.size(); ++a) {
    int mult = 0;
    LaurentPoly r = s.divisor[a];
    while (r.span() > 0 && divides(pn, r)) {
      r = exact_divide(r, pn);
      ++mult;
    }
    if (mult >= 2) return std::nullopt;
    if (mult == 1) {
      members.push_back(a);
      cofactor.push_back(r);
    }
  }
  const std::size_t k = members.size();
  if (k == 0) return 0;
  Matrix<CycloNumber> gram(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const RationalFunction f =
          (RationalFunction(cofactor[a] * invol(cofactor[b])) * s.gram(members[a], members[b])).mod_lambda();
      const RationalFunction pf = RationalFunction(p.poly) * f;
      if (!pf.is_laurent()) throw ConsistencyError("devissage: p-torsion pairing is not p-integral");
      gram(a, b) = pf.evaluate(xi);
    }
  const CycloNumber eta = flavor == Flavor::Real ? CycloNumber(1) : cyclo(4, 1) * conj(xi);
  return signature(Matrix<CycloNumber>(eta * gram)).signature();
}

int pushforward_jump(const SkewIsometricStructure<CycloNumber>& s, const LaurentPoly& char_t, const CycloNumber& xi,
                     Flavor flavor) {
  const int sigma = milnor_signature(s, xi, char_t);
  const int c = pushforward_constant(xi, flavor);
  if (sigma % c != 0) {
    throw ConsistencyError("signature_jump: Milnor signature " + std::to_string(sigma) + " is not divisible by " +
                           std::to_string(c));
  }
  return sigma / c;
}

}  // namespace

LinkingForm LinkingForm::make(LaurentMatrix relations, RationalMatrix gram, Flavor flavor) {
  LinkingForm l{std::move(relations), std::move(gram), flavor};
  l.validate();
  return l;
}

LinkingForm LinkingForm::from_hermitian(const LaurentMatrix& a, Flavor flavor) {
  if (!a.square()) throw DomainError("linking form: presentation must be square");
  if (!(invol_transpose(a) == a)) throw DomainError("linking form: presentation is not Hermitian");
  LinkingForm l{a.transpose(), rational_inverse(a), flavor};
  l.validate();
  return l;
}

void LinkingForm::validate(bool check_nonsingular) const {
  const std::size_t n = relations.rows();
  if (!relations.square() || gram.rows() != n || gram.cols() != n) {
    throw DomainError("linking form: relations and Gram matrix must be square of equal size");
  }
  if (determinant(relations).is_zero()) throw DomainError("linking form: det of the presentation is zero");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!equal_mod_lambda(gram(j, i), invol(gram(i, j)))) {
        throw DomainError("linking form: pairing is not Hermitian");
      }
  const RationalMatrix pg = to_rational(relations.transpose()) * gram;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!pg(i, j).is_laurent()) throw DomainError("linking form: relations do not pair into Lambda");
  if (flavor == Flavor::Real) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!has_real_coefficients(relations(i, j)) || !has_real_coefficients(gram(i, j))) {
          throw DomainError("linking form: real flavor requires real coefficients");
        }
  }
  if (check_nonsingular) {
    try {
      (void)chi_pushforward(*this);
    } catch (const DomainError&) {
      throw DomainError("linking form: pairing is singular");
    }
  }
}

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b) {
  if (a.flavor != b.flavor) throw DomainError("direct_sum: flavors differ");
  const std::size_t n = a.generators(), m = b.generators();
  LinkingForm s{LaurentMatrix(n + m, n + m), RationalMatrix(n + m, n + m), a.flavor};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.relations(i, j) = a.relations(i, j);
      s.gram(i, j) = a.gram(i, j);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      s.relations(n + i, n + j) = b.relations(i, j);
      s.gram(n + i, n + j) = b.gram(i, j);
    }
  return s;
}

LinkingForm negate(const LinkingForm& l) { return LinkingForm{l.relations, -l.gram, l.flavor}; }

LinkingForm base_change(const LinkingForm& l, const LaurentMatrix& u) {
  if (!u.square() || u.rows() != l.generators()) throw DomainError("base_change: size mismatch");
  const RationalMatrix ur = to_rational(u);
  return LinkingForm{unimodular_inverse(u) * l.relations, ur.transpose() * l.gram * entrywise_invol(ur), l.flavor};
}

LaurentMatrix hermitian_congruence(const LaurentMatrix& a, const LaurentMatrix& u) {
  return invol_transpose(u) * a * u;
}

LaurentMatrix adjugate(const LaurentMatrix& a) {
  if (!a.square()) throw DomainError("adjugate: matrix is not square");
  const std::size_t n = a.rows();
  LaurentMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = LaurentPoly(1L);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      LaurentPoly minor = determinant(a.submatrix(rows, cols));
      adj(i, j) = (i + j) % 2 ? -minor : minor;
    }
  return adj;
}

LaurentMatrix unimodular_inverse(const LaurentMatrix& u) {
  const LaurentPoly det = determinant(u);
  if (!det.is_unit()) throw DomainError("unimodular_inverse: determinant is not a unit");
  const LaurentPoly inv = unit_inverse(det);
  return adjugate(u).map([&](const LaurentPoly& p) { return p * inv; });
}

RationalMatrix rational_inverse(const LaurentMatrix& a) {
  const LaurentPoly det = determinant(a);
  if (det.is_zero()) throw DomainError("rational_inverse: matrix is singular");
  return adjugate(a).map([&](const LaurentPoly& p) { return RationalFunction(p, det); });
}

LinkingForm elementary_linking(int n, int eps, const CycloNumber& xi, Flavor flavor) {
  if (n < 1) throw DomainError("elementary_linking: n must be positive");
  if (eps != 1 && eps != -1) throw DomainError("elementary_linking: eps must be +-1");
  if (!on_unit_circle(xi)) throw DomainError("elementary_linking: xi is not on the unit circle");
  LinkingForm l{LaurentMatrix(1, 1), RationalMatrix(1, 1), flavor};
  const LaurentPoly e(static_cast<long>(eps));
  if (flavor == Flavor::Real) {
    const BasicPolynomial p = basic_poly(xi, Flavor::Real);
    const LaurentPoly pn = pow(p.poly, static_cast<unsigned>(n));
    l.relations(0, 0) = pn;
    l.gram(0, 0) = RationalFunction(e, pn);
    return l;
  }
  const LaurentPoly q = LaurentPoly::t(1) - LaurentPoly(xi);
  const LaurentPoly q_bar = invol(q);  // t^-1 - conj(xi)
  l.relations(0, 0) = pow(q, static_cast<unsigned>(n));
  if (n % 2 == 0) {
    const unsigned h = static_cast<unsigned>(n / 2);
    l.gram(0, 0) = RationalFunction(e, pow(q, h) * pow(q_bar, h));
    return l;
  }
  const int s = imag_sign(xi);
  if (s == 0) throw DomainError("elementary_linking: odd n requires xi != +-1 in the complex flavor");
  const unsigned h = static_cast<unsigned>(n / 2);
  const LaurentPoly num = LaurentPoly(static_cast<long>(s * eps)) * (LaurentPoly(1L) - LaurentPoly::monomial(xi, 1));
  l.gram(0, 0) = RationalFunction(num, pow(q, h + 1) * pow(q_bar, h));
  return l;
}

RationalFunction eval_pairing(const LinkingForm& l, const LaurentVector& x, const LaurentVector& y) {
  const std::size_t n = l.generators();
  if (x.size() != n || y.size() != n) throw DomainError("eval_pairing: vector length mismatch");
  RationalFunction acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || l.gram(i, j).is_zero()) continue;
      acc += RationalFunction(x[i] * invol(y[j])) * l.gram(i, j);
    }
  }
  return acc.mod_lambda();
}

DevissageForm devissage(const LinkingForm& l, const BasicPolynomial& p) {
  if (p.exceptional) throw DomainError("devissage: p is exceptional (xi = +-1)");
  if (p.flavor != l.flavor) throw DomainError("devissage: flavor of p differs from the form");
  const SplitModule s = split_module(l);
  for (const auto& d : s.divisor)
    if (!associated(d, p.poly)) {
      throw PreconditionError("devissage: module is not p-torsion; use signature_jump for p-primary modules");
    }
  const std::size_t k = s.divisor.size();
  DevissageForm out{p, Matrix<CycloNumber>(k, k), CycloNumber(1)};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const RationalFunction pf = RationalFunction(p.poly) * s.gram(a, b);
      if (!pf.is_laurent()) throw ConsistencyError("devissage: p-torsion pairing is not p-integral");
      out.gram(a, b) = pf.evaluate(p.xi);
    }
  out.u_twist = exact_divide(invol(p.poly), p.poly).evaluate(p.xi);
  return out;
}

int pushforward_constant(const CycloNumber& xi, Flavor flavor) {
  if (flavor == Flavor::Real) return -2;
  const int s = imag_sign(xi);
  if (s == 0) throw DomainError("pushforward_constant: xi = +-1 is excluded");
  return -s;
}

std::string to_string(JumpRoute r) { return r == JumpRoute::Devissage ? "routeA" : "routeB"; }

int signature_jump(const LinkingForm& l, const CycloNumber& xi) { return signature_jump_report(l, xi).value; }

JumpReport signature_jump_report(const LinkingForm& l, const CycloNumber& xi, const JumpOptions& opts) {
  return signature_jumps(l, {xi}, opts).front();
}

std::vector<JumpReport> signature_jumps(const LinkingForm& l, const std::vector<CycloNumber>& xis,
                                        const JumpOptions& opts) {
  for (const auto& xi : xis) check_jump_point(xi);
  const SplitModule s = split_module(l);
  std::optional<SkewIsometricStructure<CycloNumber>> pushed;
  LaurentPoly char_t;
  std::vector<JumpReport> out;
  for (const auto& xi : xis) {
    JumpReport r;
    r.xi = xi;
    r.devissage_value = devissage_jump(s, xi, l.flavor);
    if (!r.devissage_value || opts.check_both_routes) {
      if (!pushed) {
        pushed = pushforward(s, l.flavor);
        char_t = characteristic_laurent(pushed->t);
      }
      r.pushforward_value = pushforward_jump(*pushed, char_t, xi, l.flavor);
    }
    if (r.devissage_value) {
      r.value = *r.devissage_value;
      r.route = JumpRoute::Devissage;
    } else {
      r.value = *r.pushforward_value;
      r.route = JumpRoute::Pushforward;
    }
    out.push_back(std::move(r));
  }
  return out;
}

SkewIsometricStructure<CycloNumber> chi_pushforward(const LinkingForm& l) {
  return pushforward(split_module(l), l.flavor);
}

std::string to_string(const LinkingForm& l) {
  std::ostringstream out;
  out << "LinkingForm(" << to_string(l.flavor) << ", " << l.generators() << " generators)\n";
  for (std::size_t i = 0; i < l.generators(); ++i) {
    out << "  P[" << i << "] =";
    for (std::size_t j = 0; j < l.generators(); ++j) out << "  " << to_string(l.relations(i, j));
    out << "\n  G[" << i << "] =";
    for (std::size_t j = 0; j < l.generators(); ++j) out << "  " << to_string(l.gram(i, j));
    out << "\n";
  }
  return out.str();
}

}  // namespace milnor
