#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootharm/jacobi.hpp"
#include "rootharm/linalg.hpp"

namespace rootharm {

struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUnique : std::runtime_error {
  NonUnique(const std::string& what, int kernel) : std::runtime_error(what), kernel_dimension(kernel) {}
  int kernel_dimension;
};

enum class ShiftKind { Raise, Lower, Nonsymmetric, LowerBullet, LowerTilde, ClosedForm };
std::string to_string(ShiftKind kind);

enum class ClosedFormKind { Basic, PlusTwoMinusOne, MinusTwoPlusOne };

struct ShiftOperator {
  ShiftKind kind = ShiftKind::Nonsymmetric;
  Multiplicity source;
  std::vector<Scalar> shift;  // target parameter minus source, per orbit
  // Monomial-basis matrix. For Raise/Lower the domain lists dominant lambda and column lambda is G(m_lambda).
  LinearOperator matrix;
  std::optional<OperatorExpression> expression;
  Json certificate = Json::object();

  Multiplicity target() const;
  // Uses the expression when present, the matrix otherwise.
  LaurentPolynomial apply(const LaurentPolynomial& f) const;
  Json to_json() const;
};

// prod over R^0_+ of (alpha^vee + sign k0_alpha).
SymPoly pi_polynomial(const Multiplicity& k, int sign);
// Elementary symmetric polynomial e_m in the coroots of R^0_+.
SymPoly coroot_elementary(const RootDatum& rd, int m);

// G_+(k) = Delta^{-1} T(pi^+(k),k) and G_-(k) = T(pi^-(k-1),k-1) Delta, applied to any polynomial.
LaurentPolynomial heckman_apply(int sign, const Multiplicity& k, const LaurentPolynomial& f);
// Restriction to invariants of height <= h; transmutation against D(p,k) is certified.
ShiftOperator heckman_shift(int sign, const Multiplicity& k, int height);
Report check_heckman_shift(const ShiftOperator& g, int height);

// Outcome of the linear system S T(xi,k) = T(xi,k') S plus S m_lambda = G m_lambda.
struct ShiftSystem {
  bool consistent = true;
  int unknowns = 0;
  int rank = 0;
  int constraints = 0;
  int kernel_dimension() const { return unknowns - rank; }
  std::optional<LinearOperator> solution;  // present iff consistent with zero kernel
  Json to_json() const;
};

// Columns t^nu for nu in V_h, images searched in V_{height(nu)+pad}.
ShiftSystem solve_shift_system(const Multiplicity& source, const Multiplicity& target, int height, int pad,
                               const std::function<LaurentPolynomial(const LaurentPolynomial&)>& restriction);

// S(k) on V_h; throws NoSolution or NonUnique.
ShiftOperator nonsymmetric_shift(const Multiplicity& k, int height);
// Transmutation, restriction to G_+ and the spectral form S E(mu,k) = c E(mu',k+1).
Report check_nonsymmetric_shift(const ShiftOperator& s, int height);

// The rank one differential-reflection formulas (BC1; the basic one also on A1).
ShiftOperator rank1_closed_form(ClosedFormKind which, const Multiplicity& k);
Report check_closed_form(const ShiftOperator& closed, int height);
// Solved S against the closed form on X^m, |m| <= height.
Report compare_with_closed_form(const ShiftOperator& solved, int height);

enum class AdjointRoute { Auto, EBasis, Gram };
// S_-(k) = S(k-1)^bullet (or (-1)^N times it for the tilde variant) on V_h, images in V_{h + ht rho}.
ShiftOperator adjoint_shift(ShiftKind which, const Multiplicity& k, int height, AdjointRoute route = AdjointRoute::Auto);
// Transmutation with k -> k-1 and the left restriction properties.
Report check_adjoint_shift(const ShiftOperator& lower, int height);

Report composition_identities(const Multiplicity& k, int height);
// Looks for a lowering operator with (ii) at k-1 restricting to G_-(k); a consistent system is a finding.
Report nonexistence_probe(const Multiplicity& k, int height);

}  // namespace rootharm
