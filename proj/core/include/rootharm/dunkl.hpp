#pragma once

#include <unordered_map>
#include <vector>

#include "rootharm/operator.hpp"
#include "rootharm/report.hpp"
#include "rootharm/sym_poly.hpp"

namespace rootharm {

// All nu with nu_+ of height at most h, in a linear extension of the triangular order.
std::vector<Weight> truncation_basis(const RootDatum& rd, int height);

// Symbolic form d(xi) - rho(k)(xi) + sum_{alpha>0} k_alpha alpha(xi) (1 - t^{-alpha})^{-1}(1 - s_alpha).
OperatorExpression dunkl_expression(const Multiplicity& k, const CoVector& xi);

// Dunkl operators at a fixed parameter, applied monomial by monomial with memoisation.
class DunklFamily {
 public:
  explicit DunklFamily(Multiplicity k);

  const Multiplicity& parameter() const { return k_; }
  const RootDatum& datum() const { return k_.datum(); }

  // T(y_j, k) with y_j the j-th simple coroot.
  const LaurentPolynomial& on_monomial(int j, const Weight& mu) const;
  LaurentPolynomial apply(int j, const LaurentPolynomial& f) const;
  LaurentPolynomial apply(const CoVector& xi, const LaurentPolynomial& f) const;
  LaurentPolynomial apply(const SymPoly& p, const LaurentPolynomial& f) const;

  LinearOperator matrix(const CoVector& xi, const std::vector<Weight>& basis) const;
  LinearOperator matrix(const SymPoly& p, const std::vector<Weight>& basis) const;

  // Diagonal entry mu + w^mu rho(k).
  Spectral eigenvalue(const Weight& mu) const;

 private:
  Multiplicity k_;
  Spectral rho_;
  std::vector<std::pair<int, std::vector<Scalar>>> weighted_roots_;  // root, k_alpha alpha(y_j)
  mutable std::vector<std::unordered_map<Weight, LaurentPolynomial, WeightHash>> cache_;
};

// Coordinates of a W-invariant polynomial in the basis m_lambda (stored at dominant lambda).
LaurentPolynomial to_orbit_coordinates(const RootDatum& rd, const LaurentPolynomial& f);
LaurentPolynomial from_orbit_coordinates(const RootDatum& rd, const LaurentPolynomial& c);
// Applies `op` to every m_lambda and returns the matrix in orbit coordinates.
LinearOperator invariant_matrix(const RootDatum& rd, const std::vector<Weight>& dominant,
                                const std::function<LaurentPolynomial(const LaurentPolynomial&)>& op);

// D(p,k): restriction of T(p,k) to invariants of height <= h. Throws if the image is not invariant.
LinearOperator symmetric_restriction(const DunklFamily& T, const SymPoly& p, int height);

// Second-order coth-form operator L_A + sum_{alpha>0} k_alpha coth(alpha/2) d_{alpha*}.
OperatorExpression radial_laplacian(const Multiplicity& k);

Report check_commutativity(const DunklFamily& T, int height);
Report check_hecke_relations(const DunklFamily& T, int height);
Report check_adjointness(const DunklFamily& T, int height);
Report check_triangularity(const DunklFamily& T, int height);
Report check_radial_laplacian(const DunklFamily& T, int height);

}  // namespace rootharm
