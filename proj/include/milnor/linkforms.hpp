#pragma once

// Linking forms over the Laurent ring: a torsion module H = Lambda^n / P Lambda^n
// (columns of P are the relations) with the pairing
//   lambda(x, y) = x^T G invol(y)  in F(t)/Lambda,
// plus the elementary forms, devissage, signature jumps and the chi-pushforward
// to skew-isometric structures.
//
// A Hermitian presentation matrix A gives P = A^T, G = A^-1.

#include <optional>
#include <string>
#include <vector>

#include "milnor/isostruct.hpp"
#include "milnor/laurent.hpp"
#include "milnor/trace.hpp"

namespace milnor {

using RationalMatrix = Matrix<RationalFunction>;
using LaurentVector = std::vector<LaurentPoly>;

struct LinkingForm {
  LaurentMatrix relations;  // P, n x n with det P != 0
  RationalMatrix gram;      // G, n x n
  Flavor flavor = Flavor::Complex;

  /// Validates (see validate()); throws DomainError.
  static LinkingForm make(LaurentMatrix relations, RationalMatrix gram, Flavor flavor);
  /// From a Hermitian presentation A (invol-transpose(A) = A, det A != 0).
  static LinkingForm from_hermitian(const LaurentMatrix& a, Flavor flavor);

  std::size_t generators() const { return relations.rows(); }

  /// Shapes, det P != 0, G Hermitian modulo Lambda, P^T G integral, real
  /// coefficients in the real flavor and, when requested, nonsingularity
  /// (checked through the chi-pushforward).
  void validate(bool check_nonsingular = true) const;
};

LinkingForm direct_sum(const LinkingForm& a, const LinkingForm& b);
/// (H, -lambda)
LinkingForm negate(const LinkingForm& l);
/// Generators x = U x' for unimodular U: G' = U^T G invol(U), P' = U^-1 P.
/// Throws DomainError when U is not invertible over Lambda.
LinkingForm base_change(const LinkingForm& l, const LaurentMatrix& u);

/// invol-transpose(U) A U
LaurentMatrix hermitian_congruence(const LaurentMatrix& a, const LaurentMatrix& u);
LaurentMatrix adjugate(const LaurentMatrix& a);
/// Inverse of a matrix whose determinant is a unit; throws DomainError otherwise.
LaurentMatrix unimodular_inverse(const LaurentMatrix& u);
/// a^-1 over F(t); throws DomainError when det a = 0.
RationalMatrix rational_inverse(const LaurentMatrix& a);

/// The 1 x 1 form on F[t^+-1]/p_xi^n:
///   real:          eps / p^n,               p = t - 2Re(xi) + t^-1, Im(xi) > 0
///   complex, even: eps / ((t - xi)^(n/2) (t^-1 - conj xi)^(n/2))
///   complex, odd:  sgn(Im xi) eps (1 - xi t) / ((t - xi)^((n+1)/2) (t^-1 - conj xi)^((n-1)/2))
/// Throws DomainError on n < 1, eps != +-1, |xi| != 1, real xi in the real
/// flavor, or xi = +-1 with odd n.
LinkingForm elementary_linking(int n, int eps, const CycloNumber& xi, Flavor flavor);

/// Canonical representative of x^T G invol(y) modulo Lambda.
RationalFunction eval_pairing(const LinkingForm& l, const LaurentVector& x, const LaurentVector& y);

/// Form over the residue field Lambda/p, identified with C by t -> xi.
struct DevissageForm {
  BasicPolynomial p;
  Matrix<CycloNumber> gram;  // conj-transpose(gram) = u_twist * gram
  CycloNumber u_twist;
};

/// Requires p to annihilate H; throws PreconditionError otherwise.
DevissageForm devissage(const LinkingForm& l, const BasicPolynomial& p);

/// The constant c with sigma_xi(chi-pushforward) = c * jump: -2 over R, -sign(Im xi) over C.
int pushforward_constant(const CycloNumber& xi, Flavor flavor);

enum class JumpRoute { Devissage, Pushforward };
std::string to_string(JumpRoute r);

struct JumpOptions {
  bool check_both_routes = false;
};

struct JumpReport {
  CycloNumber xi;
  int value = 0;
  JumpRoute route = JumpRoute::Devissage;
  std::optional<int> devissage_value;    // when the xi-primary part is p-torsion
  std::optional<int> pushforward_value;  // computed when needed or requested
  bool routes_agree() const {
    return !devissage_value || !pushforward_value || *devissage_value == *pushforward_value;
  }
};

/// Signature jump at xi. Devissage when the xi-primary part of H is
/// p_xi-torsion, otherwise the chi-pushforward route. Throws DomainError for
/// xi = +-1 or |xi| != 1.
int signature_jump(const LinkingForm& l, const CycloNumber& xi);
JumpReport signature_jump_report(const LinkingForm& l, const CycloNumber& xi, const JumpOptions& opts = {});
/// Reports in the order of `xis`, sharing one Smith form and pushforward.
std::vector<JumpReport> signature_jumps(const LinkingForm& l, const std::vector<CycloNumber>& xis,
                                        const JumpOptions& opts = {});

/// (H, chi o lambda, t) on the F-basis t^j e_i of the Smith-form summands
/// Lambda/(d_i); t acts by companion matrices. Throws DomainError when
/// det P = 0 or the resulting form is singular.
SkewIsometricStructure<CycloNumber> chi_pushforward(const LinkingForm& l);

std::string to_string(const LinkingForm& l);

}  // namespace milnor
