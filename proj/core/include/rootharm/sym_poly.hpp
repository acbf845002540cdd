#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "rootharm/rootdata.hpp"

namespace rootharm {

// Element of S(a): polynomial in the simple coroots y_j = alpha_j^vee with Scalar coefficients.
class SymPoly {
 public:
  using Exps = std::array<std::uint8_t, kMaxRank>;

  SymPoly() = default;
  static SymPoly constant(const Scalar& c);
  static SymPoly variable(int j);
  static SymPoly linear(const CoVector& xi);

  const std::map<Exps, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const Scalar& c, const SymPoly& a);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }
  SymPoly pow(int n) const;

  // Natural action of w on S(a) through its coroot matrix.
  SymPoly act(const WeylGroup& W, int w) const;
  // Substitution y -> M y for an integer matrix on coroot coordinates.
  SymPoly linear_substitute(const IntMatrix& m, int rank) const;
  // Exact division by the variable y_i; throws if a term lacks y_i.
  SymPoly divide_by_variable(int i) const;
  Scalar evaluate(const Spectral& lambda) const;
  SymPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  std::string to_string() const;

 private:
  void add(const Exps& e, const Scalar& c);
  std::map<Exps, Scalar> terms_;
};

// (lambda, lambda) as a polynomial in the y_j.
SymPoly squared_norm_polynomial(const RootDatum& rd);
// Basis of the W-invariant homogeneous polynomials of the given degree.
std::vector<SymPoly> invariant_basis(const RootDatum& rd, int degree);
// Invariant basis elements for every degree 1..max_degree.
std::vector<SymPoly> invariants_up_to(const RootDatum& rd, int max_degree);

}  // namespace rootharm
