#pragma once

// Fibered 3-manifolds: skew-isometric structures from a twisted intersection
// form lambda and a monodromy phi (t acts by phi^-1), their construction from
// Seifert matrices for abelian twists, Levine-Tristram signatures, cyclic
// covers and a Blanchfield presentation used for cross-checks.

#include <optional>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/hermforms.hpp"
#include "milnor/isostruct.hpp"
#include "milnor/linkforms.hpp"

namespace milnor {

using IntMatrix = Matrix<long>;

template <FieldScalar S>
struct FiberedData {
  HermitianMatrix<S> lambda;  // epsilon = -1, nonsingular
  Matrix<S> phi;              // isometry of lambda
  Flavor flavor = Flavor::Complex;

  /// Throws DomainError unless lambda is nonsingular skew-Hermitian and phi an
  /// invertible isometry (phi^T lambda conj(phi) = lambda).
  static FiberedData make(Matrix<S> lambda, Matrix<S> phi, Flavor flavor) {
    FiberedData f{HermitianMatrix<S>::make(std::move(lambda), -1, flavor), std::move(phi), flavor};
    f.validate();
    return f;
  }

  std::size_t dim() const { return phi.rows(); }

  void validate() const {
    const Matrix<S>& l = lambda.entries;
    if (lambda.epsilon != -1) throw DomainError("fibered data: intersection form must be skew-Hermitian");
    if (!phi.square() || phi.rows() != l.rows()) throw DomainError("fibered data: size mismatch");
    if (rank(l) != l.rows()) throw DomainError("fibered data: intersection form is singular");
    if (rank(phi) != phi.rows()) throw DomainError("fibered data: monodromy is not invertible");
    if (!(phi.transpose() * l * entrywise_conj(phi) == l)) {
      throw DomainError("fibered data: monodromy is not an isometry of the intersection form");
    }
  }
};

/// (H, lambda, phi^-1)
template <FieldScalar S>
SkewIsometricStructure<S> milnor_structure(const FiberedData<S>& f) {
  f.validate();
  return SkewIsometricStructure<S>::make(f.lambda.entries, inverse(f.phi), f.flavor);
}

/// b(x, y) = lambda(phi^-1 x, y) - lambda(x, phi^-1 y), assembled directly.
template <FieldScalar S>
HermitianMatrix<S> symmetrized_form(const FiberedData<S>& f) {
  const Matrix<S> phi_inv = inverse(f.phi);
  const Matrix<S>& l = f.lambda.entries;
  return HermitianMatrix<S>::make(phi_inv.transpose() * l - l * entrywise_conj(phi_inv), 1, f.flavor);
}

/// Same fiber, monodromy phi^n. Throws DomainError for n < 1.
template <FieldScalar S>
FiberedData<S> cyclic_cover(const FiberedData<S>& f, int n) {
  if (n < 1) throw DomainError("cyclic_cover: n must be positive");
  Matrix<S> p = f.phi;
  for (int k = 1; k < n; ++k) p = p * f.phi;
  return FiberedData<S>{f.lambda, std::move(p), f.flavor};
}

/// Checks that V is square of even size; returns it over the cyclotomics.
Matrix<CycloNumber> seifert_matrix(const IntMatrix& v);

/// lambda = V - V^T and phi = omega V^-1 V^T, so that t = omega^-1 V^-T V.
/// Real flavor for omega = +-1, complex otherwise. Throws DomainError when
/// det V = 0, |omega| != 1 or V - V^T is singular.
FiberedData<CycloNumber> from_seifert(const IntMatrix& v, const CycloNumber& omega);

/// sign((1 - omega) V + (1 - conj omega) V^T); 0 for the empty matrix.
/// Throws DomainError for omega = 1 or |omega| != 1.
int levine_tristram(const IntMatrix& v, const CycloNumber& omega);

/// det(t V^T - V)
LaurentPoly alexander_polynomial(const IntMatrix& v);
/// Roots of the Alexander polynomial among the factor_basic candidates,
/// other than +-1, each once with Im > 0.
std::vector<CycloNumber> alexander_circle_roots(const IntMatrix& v);

struct BlanchfieldOptions {
#ifdef NDEBUG
  bool cross_check = false;
#else
  bool cross_check = true;
#endif
};

/// Linking form with relations t V^T - V and Gram (1 - t)(t V - V^T)^-1 (real
/// flavor). With cross_check, compares Milnor signatures with the fibered
/// pipeline and throws ConsistencyError when their ratio is not one sign.
/// Throws DomainError when det V = 0.
LinkingForm blanchfield_from_seifert(const IntMatrix& v, const BlanchfieldOptions& opts = {});

/// Per-point comparison of sigma_xi(chi-pushforward(blanchfield)) against
/// sigma_xi(milnor_structure(from_seifert(V, 1))).
struct BlanchfieldComparison {
  std::vector<CycloNumber> points;
  std::vector<int> blanchfield;
  std::vector<int> fibered;
  /// The common ratio when every pair is (s * b, b) for one s = +-1; nullopt
  /// when all signatures vanish.
  std::optional<int> sign;
  bool consistent = true;
};

/// Points default to the Alexander circle roots.
BlanchfieldComparison compare_blanchfield(const IntMatrix& v, std::optional<std::vector<CycloNumber>> points = {});

/// The sign s in chi o Bl = s * mu measured on trefoil, figure-eight and
/// T(2,7); recorded here so callers can detect a change.
inline constexpr int kMeasuredBlanchfieldSign = -1;

}  // namespace milnor
