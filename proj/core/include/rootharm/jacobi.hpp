#pragma once

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "rootharm/dunkl.hpp"
#include "rootharm/gamma_product.hpp"

namespace rootharm {

struct EigenvalueCollision : std::runtime_error {
  EigenvalueCollision(const std::string& what, Weight mu_, Weight nu_)
      : std::runtime_error(what), mu(mu_), nu(nu_) {}
  Weight mu, nu;
};

// Nonsymmetric and symmetric Jacobi polynomials at a fixed parameter.
class JacobiSystem {
 public:
  explicit JacobiSystem(Multiplicity k) : T_(std::move(k)) {}

  const Multiplicity& parameter() const { return T_.parameter(); }
  const RootDatum& datum() const { return T_.datum(); }
  const DunklFamily& dunkl() const { return T_; }
  Spectral eigenvalue(const Weight& mu) const { return T_.eigenvalue(mu); }

  // Monic E(mu,k) = t^mu + lower terms; throws EigenvalueCollision at degenerate parameters.
  const LaurentPolynomial& nonsymmetric(const Weight& mu) const;
  // P(lambda,k): symmetrisation of E(w0 lambda,k) with unit coefficient at t^lambda.
  LaurentPolynomial symmetric(const Weight& lambda) const;
  // Coefficients of f in the basis {E(nu,k)}.
  std::map<Weight, Scalar> expand(const LaurentPolynomial& f) const;

 private:
  DunklFamily T_;
  mutable std::unordered_map<Weight, LaurentPolynomial, WeightHash> cache_;
};

// Gamma-product c-functions; lambda is a point of a_C^* given by its values on the simple coroots.
GammaProduct c_tilde(const Multiplicity& k, const Spectral& lambda, int w);
GammaProduct c_star(const Multiplicity& k, const Spectral& lambda, int w);
// c(lambda,k) = c~(lambda,k) / c~(rho(k),k)
GammaProduct c_normalized(const Multiplicity& k, const Spectral& lambda);

// Squared norm of E(mu,k) from the c-function quotient, as a Gamma product (includes 1/|W|).
GammaProduct norm_gamma(const Multiplicity& k, const Weight& mu);
// Exact value: numeric parameters are evaluated, symbolic ones must reduce.
Scalar norm_formula(const Multiplicity& k, const Weight& mu);
// ||E(mu,k)||^2 / ||1||^2_k, rational for symbolic k.
Scalar relative_norm(const Multiplicity& k, const Weight& mu);
// <1,1>_k by the constant term, for nonnegative integer k.
Scalar constant_term_value(const Multiplicity& k);

Report check_eigenfunctions(const JacobiSystem& J, int height);
Report check_orthogonality(const JacobiSystem& J, int height);

}  // namespace rootharm
