#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "rootharm/rootdata.hpp"
#include "rootharm/scalar.hpp"

namespace rootharm {

struct DivisionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finitely supported map P -> Scalar; zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Weight, Scalar>;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(const Weight& mu, const Scalar& c = Scalar(1));
  static LaurentPolynomial constant(const Scalar& c) { return monomial(Weight{}, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Weight& mu) const;
  void add_term(const Weight& mu, const Scalar& c);

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Scalar& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Scalar& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Scalar& c, LaurentPolynomial a) { return a *= c; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

  LaurentPolynomial shifted(const Weight& mu) const;  // multiply by t^mu
  LaurentPolynomial act(const WeylGroup& W, int w) const;
  // t^mu -> t^{-mu}; coefficients conjugated by negating the variables in `imaginary`.
  LaurentPolynomial conj(std::uint32_t imaginary = 0) const;
  Scalar constant_term() const { return coefficient(Weight{}); }
  // Exact quotient by (1 - c * t^{-beta}); throws DivisionFailure on a remainder.
  LaurentPolynomial divide_binomial(const Weight& beta, const Scalar& c = Scalar(1)) const;
  LaurentPolynomial map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;
  LaurentPolynomial substitute(const std::map<int, Rational>& values) const;
  // Value at the point t^{omega_i} = x[i]; parameters bound via `params`.
  double evaluate(const std::vector<double>& x, const std::map<int, double>& params = {}) const;
  int max_height(const RootDatum& rd) const;

  std::string to_string(const RootDatum& rd) const;

 private:
  TermMap terms_;
};

// Weyl denominator prod_{alpha in R^0_+} (t^{alpha/2} - t^{-alpha/2}).
LaurentPolynomial weyl_denominator(const RootDatum& rd);
Weight weyl_denominator_shift(const RootDatum& rd);  // rho of R^0
LaurentPolynomial divide_by_weyl_denominator(const RootDatum& rd, const LaurentPolynomial& f);
// prod_{alpha in R_+} (2 - t^alpha - t^{-alpha})^{k_alpha} for nonnegative integer k.
LaurentPolynomial weyl_density(const Multiplicity& k);
// |W|^{-1} CT(f * conj(g) * density(k)).
Scalar inner_product(const LaurentPolynomial& f, const LaurentPolynomial& g, const Multiplicity& k);
Scalar inner_product(const LaurentPolynomial& f, const LaurentPolynomial& g,
                     const LaurentPolynomial& density, int weyl_order);
LaurentPolynomial symmetrize(const RootDatum& rd, const LaurentPolynomial& f, int sign);
LaurentPolynomial monomial_symmetric(const RootDatum& rd, const Weight& lambda);

}  // namespace rootharm
