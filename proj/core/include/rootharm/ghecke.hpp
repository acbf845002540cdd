#pragma once

#include <map>
#include <random>
#include <vector>

#include "rootharm/dunkl.hpp"
#include "rootharm/jacobi.hpp"

namespace rootharm {

// Element sum_w p_w w of the graded Hecke algebra, polynomials on the left.
class HeckeElement {
 public:
  HeckeElement() = default;
  static HeckeElement polynomial(const SymPoly& p);
  static HeckeElement group(int w);
  static HeckeElement term(const SymPoly& p, int w);

  const std::map<int, SymPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Scalar& c, const HeckeElement& a);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  void add(int w, const SymPoly& p);
  std::string to_string(const WeylGroup& W) const;
  Json to_json(const WeylGroup& W) const;

 private:
  std::map<int, SymPoly> terms_;
};

class GradedHeckeAlgebra {
 public:
  explicit GradedHeckeAlgebra(Multiplicity k) : k_(std::move(k)) {}

  const Multiplicity& parameter() const { return k_; }
  const RootDatum& datum() const { return k_.datum(); }

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  // Normal form of w * p.
  HeckeElement commute(int w, const SymPoly& p) const;
  // Coefficients q_w of the right normal form sum_w w q_w.
  std::map<int, SymPoly> right_form(const HeckeElement& a) const;

  // Anti-linear anti-involutions; `imaginary` marks parameters that conjugate to their negatives.
  HeckeElement bullet(const HeckeElement& a, std::uint32_t imaginary = 0) const;
  HeckeElement star(const HeckeElement& a, std::uint32_t imaginary = 0) const;

  std::vector<HeckeElement> generators() const;
  // PBW monomials y^e w with deg e <= degree.
  std::vector<HeckeElement> pbw_basis(int degree) const;
  HeckeElement random_element(std::mt19937& rng, int degree, int terms) const;

  Report is_central(const HeckeElement& a) const;

 private:
  HeckeElement left_simple(int i, const HeckeElement& a) const;  // s_i * a
  Multiplicity k_;
};

// The Dunkl-Cherednik representation applied to a polynomial.
LaurentPolynomial eta_apply(const DunklFamily& T, const HeckeElement& a, const LaurentPolynomial& f);

// Module with basis vectors indexed by Weyl elements (I_lambda) or by the orbit W lambda (V_lambda~).
class InducedModule {
 public:
  using Matrix = std::vector<std::vector<Scalar>>;  // [row][column]

  // I_lambda = H (x)_A C_lambda.
  static InducedModule principal(const GradedHeckeAlgebra& H, const Spectral& lambda);
  // V_lambda~ = H (x)_{H_lambda} C_lambda~ for dominant lambda; basis labelled by w lambda.
  static InducedModule spherical(const GradedHeckeAlgebra& H, const Weight& lambda);

  int dimension() const { return static_cast<int>(basis_.size()); }
  // Weyl element labelling each basis vector (a minimal coset representative for V).
  const std::vector<int>& basis() const { return basis_; }
  const Spectral& character() const { return character_; }
  Matrix action(const HeckeElement& h) const;

 private:
  InducedModule(const GradedHeckeAlgebra& H) : H_(&H) {}
  const GradedHeckeAlgebra* H_;
  Spectral character_;
  std::vector<int> basis_;
  std::vector<int> coset_of_;  // Weyl element -> basis index
};

// (h v, w) = (v, h^* w) on I_lambda for the orthonormal pairing, lambda formally imaginary.
Report check_pairing_invariance(const GradedHeckeAlgebra& H, std::uint32_t imaginary);
// eta(ab) = eta(a) eta(b) on random pairs, and linear independence of eta on PBW monomials.
Report check_eta_compatibility(const GradedHeckeAlgebra& H, const DunklFamily& T, int height,
                               unsigned seed, int pairs);
Report check_eta_injective(const Multiplicity& numeric_k, int degree, int height);
// span{E(w lambda,k)} is eta-stable and isomorphic to V_lambda~ via j(1 (x) 1) = E(lambda,k).
Report check_e_span_module(const GradedHeckeAlgebra& H, const JacobiSystem& J, const Weight& lambda);
// Defining relations of H on the generators through eta.
Report check_algebra_axioms(const GradedHeckeAlgebra& H, unsigned seed, int samples);

}  // namespace rootharm
