#include <gtest/gtest.h>

#include "rootharm/jacobi.hpp"

using namespace rootharm;

namespace {

Scalar k() { return Scalar::variable("k"); }

LaurentPolynomial X(int m, const Scalar& c = Scalar(1)) {
  Weight w;
  w.c[0] = m;
  return LaurentPolynomial::monomial(w, c);
}

Weight w1(int m) {
  Weight w;
  w.c[0] = m;
  return w;
}

Scalar pochhammer(const Scalar& a, int n) {
  Scalar r(1);
  for (int i = 0; i < n; ++i) r *= a + Scalar(long(i));
  return r;
}

Scalar factorial(int n) { return pochhammer(Scalar(1), n); }

// Gegenbauer polynomial in x = (X + X^{-1})/2, expanded in X by the classical generating series.
LaurentPolynomial gegenbauer(int n, const Scalar& lam) {
  LaurentPolynomial p;
  for (int j = 0; j <= n; ++j)
    p.add_term(w1(n - 2 * j),
               pochhammer(lam, j) * pochhammer(lam, n - j) / (factorial(j) * factorial(n - j)));
  return p;
}

}  // namespace

TEST(GammaProduct, FunctionalEquation) {
  Polynomial z = Polynomial::variable("l1");
  GammaProduct g = GammaProduct::gamma(z + Polynomial(2)) / GammaProduct::gamma(z);
  EXPECT_EQ(g.rational_value(), Scalar(z * (z + Polynomial(1))));
  GammaProduct h = GammaProduct::gamma(z) / GammaProduct::gamma(z + Polynomial(3));
  EXPECT_EQ(h.rational_value(), Scalar(z * (z + Polynomial(1)) * (z + Polynomial(2))).inverse());
  EXPECT_THROW(GammaProduct::gamma(z).rational_value(), NotReducible);
}

TEST(GammaProduct, ExactValues) {
  auto g = [](Rational x) { return GammaProduct::gamma(Polynomial(x)); };
  EXPECT_EQ(g(5).evaluate_exact(), Scalar(24));
  EXPECT_EQ((g(Rational(5, 2)) / g(Rational(1, 2))).evaluate_exact(), Scalar(Rational(3, 4)));
  EXPECT_EQ((g(Rational(-1, 2)) / g(Rational(1, 2))).evaluate_exact(), Scalar(-2));
  EXPECT_THROW(g(Rational(1, 2)).evaluate_exact(), NotReducible);
  EXPECT_EQ((GammaProduct() / g(0)).evaluate_exact(), Scalar());
  EXPECT_THROW(g(-1).evaluate_exact(), NotReducible);
}

TEST(CFunction, RankOneTokens) {
  auto rd = RootDatum::build("A1");
  auto kk = Multiplicity::symbolic(rd);
  Scalar l = Scalar::variable("l1");
  GammaProduct c = c_tilde(kk, {l}, 0);
  ASSERT_EQ(c.tokens().size(), 2u);
  EXPECT_EQ(c.tokens().at(Polynomial::variable("l1")), 1);
  EXPECT_EQ(c.tokens().at(Polynomial::variable("l1") + Polynomial::variable("k")), -1);
  // c(rho(k),k) = 1
  EXPECT_EQ(c_normalized(kk, kk.rho()).rational_value(), Scalar(1));
  // zero multiplicity gives the empty product
  EXPECT_EQ(c_normalized(Multiplicity::constant(rd, 0), {l}).rational_value(), Scalar(1));
}

TEST(Jacobi, RankOneExamples) {
  auto rd = RootDatum::build("A1");
  JacobiSystem J(Multiplicity::symbolic(rd));
  EXPECT_EQ(J.nonsymmetric(w1(0)), X(0));
  EXPECT_EQ(J.nonsymmetric(w1(1)), X(1));
  EXPECT_EQ(J.nonsymmetric(w1(-1)), X(-1) + X(1, k() / (Scalar(1) + k())));
  EXPECT_EQ(J.symmetric(w1(0)), X(0));
  EXPECT_EQ(J.symmetric(w1(1)), X(1) + X(-1));
  EXPECT_EQ(J.symmetric(w1(2)), X(2) + X(-2) + X(0, Scalar(2) * k() / (Scalar(1) + k())));
}

TEST(Jacobi, GegenbauerOracle) {
  auto rd = RootDatum::build("A1");
  JacobiSystem J(Multiplicity::symbolic(rd));
  for (int n = 0; n <= 6; ++n) {
    LaurentPolynomial g = gegenbauer(n, k());
    EXPECT_EQ(J.symmetric(w1(n)), g * g.coefficient(w1(n)).inverse()) << n;
  }
  // three-term recurrence 2x C_n = ((n+1) C_{n+1} + (n + 2k - 1) C_{n-1}) / (n + k)
  for (int n = 1; n <= 5; ++n) {
    LaurentPolynomial lhs = (X(1) + X(-1)) * gegenbauer(n, k());
    LaurentPolynomial rhs = (gegenbauer(n + 1, k()) * Scalar(long(n + 1)) +
                             gegenbauer(n - 1, k()) * (Scalar(long(n - 1)) + Scalar(2) * k())) *
                            (Scalar(long(n)) + k()).inverse();
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Jacobi, EigenfunctionsAndSpecialisation) {
  for (const char* label : {"A1", "A2", "B2", "BC1", "G2"}) {
    auto rd = RootDatum::build(label);
    JacobiSystem J(Multiplicity::symbolic(rd));
    EXPECT_TRUE(check_eigenfunctions(J, rd.label() == "G2" ? 1 : 2).pass) << label;
    JacobiSystem J0(Multiplicity::constant(rd, 0));
    for (const auto& mu : truncation_basis(rd, 2))
      EXPECT_EQ(J0.nonsymmetric(mu), LaurentPolynomial::monomial(mu)) << label;
  }
}

TEST(Jacobi, SymmetricIsInvariantEigenfunction) {
  auto rd = RootDatum::build("A2");
  auto kk = Multiplicity::symbolic(rd);
  JacobiSystem J(kk);
  SymPoly p2 = squared_norm_polynomial(rd);
  for (const auto& lambda : rd.dominant_of_height(2)) {
    LaurentPolynomial P = J.symmetric(lambda);
    EXPECT_NO_THROW(to_orbit_coordinates(rd, P));
    Spectral shifted = rd.to_spectral(lambda);
    for (int j = 0; j < 2; ++j) shifted[j] += kk.rho()[j];
    EXPECT_EQ(J.dunkl().apply(p2, P), P * p2.evaluate(shifted));
  }
}

TEST(Jacobi, CollisionIsReported) {
  auto rd = RootDatum::build("A1");
  JacobiSystem J(Multiplicity::constant(rd, -1));
  EXPECT_THROW(J.nonsymmetric(w1(-1)), EigenvalueCollision);
}

TEST(Norms, ConstantTermValues) {
  auto rd = RootDatum::build("A1");
  EXPECT_EQ(constant_term_value(Multiplicity::constant(rd, 1)), Scalar(1));
  EXPECT_EQ(constant_term_value(Multiplicity::constant(rd, 2)), Scalar(3));
  EXPECT_EQ(constant_term_value(Multiplicity::constant(rd, 3)), Scalar(10));
  auto a2 = RootDatum::build("A2");
  // (3k)!/(k!)^3 / |W| at k = 1
  EXPECT_EQ(constant_term_value(Multiplicity::constant(a2, 1)), Scalar(1));
  EXPECT_EQ(constant_term_value(Multiplicity::constant(a2, 2)), Scalar(15));
}

TEST(Norms, FormulaMatchesConstantTerm) {
  auto rd = RootDatum::build("A1");
  EXPECT_EQ(norm_formula(Multiplicity::constant(rd, 1), w1(1)), Scalar(1));
  EXPECT_EQ(norm_formula(Multiplicity::constant(rd, 2), w1(1)), Scalar(3));
  for (long kv = 1; kv <= 3; ++kv)
    EXPECT_EQ(norm_formula(Multiplicity::constant(rd, kv), w1(0)),
              constant_term_value(Multiplicity::constant(rd, kv)));
  EXPECT_THROW(norm_formula(Multiplicity::symbolic(rd), w1(0)), NotReducible);
  EXPECT_NO_THROW(relative_norm(Multiplicity::symbolic(rd), w1(-2)));
}

TEST(Norms, Orthogonality) {
  struct Case {
    const char* label;
    const char* k;
    int height;
  };
  for (const Case& c : {Case{"A1", "0", 3}, Case{"A1", "1", 3}, Case{"A1", "2", 3}, Case{"A1", "3", 3},
                        Case{"BC1", "1,1", 3}, Case{"A2", "1", 2}, Case{"B2", "1,2", 2}}) {
    auto rd = RootDatum::build(c.label);
    JacobiSystem J(Multiplicity::parse(rd, c.k));
    auto rep = check_orthogonality(J, c.height);
    EXPECT_TRUE(rep.pass) << c.label << " k=" << c.k << " " << rep.to_json().dump();
  }
}
