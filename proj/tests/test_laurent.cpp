#include <gtest/gtest.h>

#include "rootharm/operator.hpp"

using namespace rootharm;

namespace {

Weight w1(int m) {
  Weight w;
  w.c[0] = m;
  return w;
}

LaurentPolynomial X(int m, const Scalar& c = Scalar(1)) { return LaurentPolynomial::monomial(w1(m), c); }
LaurentPolynomial one() { return LaurentPolynomial::constant(Scalar(1)); }

}  // namespace

TEST(Laurent, ConstantTerms) {
  LaurentPolynomial d = X(1) - X(-1);
  EXPECT_EQ((d * d).constant_term(), Scalar(-2));
  EXPECT_EQ(one().constant_term(), Scalar(1));
  LaurentPolynomial b = LaurentPolynomial::constant(Scalar(2)) - X(2) - X(-2);
  EXPECT_EQ((b * b).constant_term(), Scalar(6));
}

TEST(Laurent, WeylDenominatorAndDensity) {
  RootDatum a1 = RootDatum::build("A1"), bc1 = RootDatum::build("BC1"), a2 = RootDatum::build("A2");
  EXPECT_EQ(weyl_denominator(a1), X(1) - X(-1));
  EXPECT_EQ(weyl_denominator(bc1), X(1) - X(-1));
  LaurentPolynomial d2 = weyl_denominator(a2);
  for (int i = 0; i < 2; ++i) EXPECT_EQ(d2.act(a2.weyl(), a2.weyl().simple(i)), -d2);
  LaurentPolynomial two = LaurentPolynomial::constant(Scalar(2));
  EXPECT_EQ(weyl_density(Multiplicity::constant(a1, Scalar(1))), two - X(2) - X(-2));
  EXPECT_EQ(weyl_density(Multiplicity::constant(a1, Scalar(0))), one());
  EXPECT_EQ(weyl_density(Multiplicity::parse(bc1, "1,1")), (two - X(2) - X(-2)) * (two - X(1) - X(-1)));
}

TEST(Laurent, InnerProducts) {
  RootDatum a1 = RootDatum::build("A1");
  Multiplicity k1 = Multiplicity::constant(a1, Scalar(1)), k2 = Multiplicity::constant(a1, Scalar(2));
  EXPECT_EQ(inner_product(one(), one(), k1), Scalar(1));
  EXPECT_EQ(inner_product(one(), one(), k2), Scalar(3));
  EXPECT_EQ(inner_product(X(1), one(), k1), Scalar(0));
  // Hermitian in the conjugation t -> 1/t.
  LaurentPolynomial f = X(1) + X(-1, Scalar(3)), g = X(1, Scalar(2)) + one();
  EXPECT_EQ(inner_product(f, g, k2), inner_product(g, f, k2));
}

TEST(Laurent, Symmetrizers) {
  RootDatum a1 = RootDatum::build("A1");
  EXPECT_EQ(symmetrize(a1, X(1), 1), (X(1) + X(-1)) * Scalar::rational(1, 2));
  EXPECT_EQ(symmetrize(a1, one(), 1), one());
  EXPECT_EQ(symmetrize(a1, X(1), -1), (X(1) - X(-1)) * Scalar::rational(1, 2));
  EXPECT_EQ(monomial_symmetric(a1, w1(2)), X(2) + X(-2));
}

TEST(Laurent, ExactDivision) {
  RootDatum a1 = RootDatum::build("A1");
  EXPECT_EQ(divide_by_weyl_denominator(a1, X(2) - X(-2)), X(1) + X(-1));
  EXPECT_THROW(divide_by_weyl_denominator(a1, X(1)), DivisionFailure);
  // (X - X^-1) / (1 - X^-2) = X
  EXPECT_EQ((X(1) - X(-1)).divide_binomial(w1(2)), X(1));
  EXPECT_EQ(OperatorExpression::divided_difference(a1, a1.positive_roots()[0]).apply(X(1)), X(1));
  Scalar q = Scalar::variable("q");
  LaurentPolynomial f = (one() - X(-2, q)) * (X(3) + one());
  EXPECT_EQ(f.divide_binomial(w1(2), q), X(3) + one());
}

TEST(Laurent, OperatorMatrices) {
  RootDatum a1 = RootDatum::build("A1");
  std::vector<Weight> basis = {w1(0), w1(1), w1(-1)};
  LinearOperator id = LinearOperator::from_expression(OperatorExpression::identity(), basis);
  EXPECT_EQ(id.first_difference(LinearOperator::identity(basis)), std::nullopt);
  LinearOperator s = LinearOperator::from_expression(OperatorExpression::reflection(a1, a1.weyl().simple(0)), basis);
  EXPECT_EQ(s.entry(w1(-1), w1(1)), Scalar(1));
  EXPECT_EQ(s.entry(w1(1), w1(-1)), Scalar(1));
  EXPECT_EQ(s.entry(w1(0), w1(0)), Scalar(1));
  EXPECT_TRUE(s.compose(s).first_difference(id) == std::nullopt);
}

TEST(Laurent, Evaluation) {
  LaurentPolynomial f = X(2) + X(-1, Scalar::variable("k"));
  EXPECT_NEAR(f.evaluate({2.0}, {{variable_index("k"), 3.0}}), 5.5, 1e-14);
  RootDatum a1 = RootDatum::build("A1");
  EXPECT_EQ(f.max_height(a1), 2);
  EXPECT_EQ(f.conj(), X(-2) + X(1, Scalar::variable("k")));
}
