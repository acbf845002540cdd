#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rootharm/scalar.hpp"

namespace rootharm {

struct NotReducible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// prefactor * prod Gamma(L)^e over affine-linear forms L in the parameter variables.
class GammaProduct {
 public:
  GammaProduct() : prefactor_(1) {}
  explicit GammaProduct(Scalar prefactor) : prefactor_(std::move(prefactor)) {}
  static GammaProduct gamma(const Polynomial& argument, int exponent = 1);

  const Scalar& prefactor() const { return prefactor_; }
  // Unpaired tokens after reduction; keys ordered canonically.
  const std::map<Polynomial, int>& tokens() const { return tokens_; }

  GammaProduct& operator*=(const GammaProduct& o);
  GammaProduct& operator/=(const GammaProduct& o);
  friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }
  friend GammaProduct operator/(GammaProduct a, const GammaProduct& b) { return a /= b; }

  // Rewrites Gamma(L + n) against Gamma(L) for tokens whose forms differ by integers.
  void reduce();
  bool is_rational() const;
  Scalar rational_value() const;  // throws NotReducible

  GammaProduct substitute(const std::map<int, Rational>& values) const;
  // Exact value when every argument is a number; Gamma at half-integers must pair off sqrt(pi).
  Scalar evaluate_exact() const;

  std::string to_string() const;

 private:
  Scalar prefactor_;
  std::map<Polynomial, int> tokens_;
};

}  // namespace rootharm
