#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rootharm/laurent.hpp"
#include "rootharm/report.hpp"

namespace rootharm {

struct PoleCancellationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orbit-wise p-adic parameters q_alpha. Symbolic names follow the orbit names
// of the datum with k replaced by q (q, q_s, q_l, ...).
class HeckeParam {
 public:
  HeckeParam() = default;
  HeckeParam(const RootDatum& rd, std::vector<Scalar> values);
  static HeckeParam symbolic(const RootDatum& rd);
  static HeckeParam equal(const RootDatum& rd, const Scalar& q);
  // "symbolic", one value, or one value per orbit.
  static HeckeParam parse(const RootDatum& rd, std::string_view text);

  const RootDatum& datum() const { return rd_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& of_root(int root) const { return values_[rd_.roots()[root].orbit]; }
  // Parameter of alpha/2 when it is a root, 1 otherwise.
  Scalar half(int root) const;
  // Values of the symbolic q variables set to 1.
  std::map<int, Rational> at_one() const;
  bool is_symbolic() const;
  // delta^{sign/2}(pi^lambda); odd powers use the formal square root variable sq, sq_s, ...
  Scalar delta_half(const Weight& lambda, int sign) const;
  std::string to_string() const;

 private:
  RootDatum rd_;
  std::vector<Scalar> values_;
};

// Sum over W of q(w)^sign, q(w) the product of q_alpha over the inversion set of w.
Scalar poincare_polynomial(const HeckeParam& q, int sign = 1);
// Same sum over the stabilizer of a dominant weight.
Scalar stabilizer_poincare(const HeckeParam& q, const Weight& lambda, int sign = 1);

// 1 - c t^{-beta}
struct Binomial {
  Weight beta;
  Scalar c;
};

struct CFunction {
  std::vector<Binomial> numerator, denominator;

  LaurentPolynomial expand_numerator() const;
  LaurentPolynomial expand_denominator() const;
  CFunction act(const WeylGroup& W, int w) const;
  double evaluate(const std::vector<double>& x, const std::map<int, double>& params = {}) const;
  std::string to_string(const RootDatum& rd) const;
};

CFunction c_padic(const HeckeParam& q);
// Checks sum_w c(wt) = P_W(q^{-1}) by clearing denominators.
Report check_c_sum(const HeckeParam& q);

// P_W(q^{-1})^{-1} sum_w w(c t^lambda), reduced to a Laurent polynomial.
LaurentPolynomial satake_image(const Weight& lambda, const HeckeParam& q);
// Zonal spherical function at pi^{-lambda} as a polynomial in t.
LaurentPolynomial spherical_value(const Weight& lambda, const HeckeParam& q);

// Horosphere counts on the (q+1)-regular tree for the sphere of radius n.
struct TreeCount {
  int n = 0;
  long q = 0;
  std::vector<long> levels;  // levels[j] sits at height 2j - n
  long sphere = 0;
};
TreeCount count_tree(int n, long q);
// Satake image of the radius n sphere rebuilt from the counts (A1 datum).
LaurentPolynomial tree_oracle(const RootDatum& rd, int n, long q);
Report check_tree_oracle(int max_n, long q);

// Pole freeness, invariance, lambda = 0 and the q -> 1 limit up to the given height.
Report check_satake(const HeckeParam& q, int height);

}  // namespace rootharm
