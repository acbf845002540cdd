#include <gtest/gtest.h>

#include "rootharm/scalar.hpp"

using namespace rootharm;

namespace {

Polynomial var(const char* name) { return Polynomial::variable(name); }

}  // namespace

TEST(Polynomial, Arithmetic) {
  Polynomial k = var("k"), q = var("q");
  Polynomial p = (k + Polynomial(1)) * (k - Polynomial(1));
  EXPECT_EQ(p, k.pow(2) - Polynomial(1));
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ((k * q + q).degree_in(variable_index("q")), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(Polynomial(Rational(3, 4)).constant_value(), Rational(3, 4));
}

TEST(Polynomial, DivisionAndGcd) {
  Polynomial k = var("k"), l = var("k_l");
  Polynomial a = (k + Polynomial(2)) * (k - l);
  Polynomial b = (k - l) * (k + l);
  auto q = a.divide_exact(k - l);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, k + Polynomial(2));
  EXPECT_FALSE(a.divide_exact(k + l));
  EXPECT_EQ(gcd(a, b).monic(), (k - l).monic());
  EXPECT_EQ(gcd(Polynomial(6), Polynomial(4)).is_constant(), true);
}

TEST(Polynomial, Substitution) {
  Polynomial k = var("k"), s = var("k_s");
  Polynomial p = k.pow(2) + s * k;
  EXPECT_EQ(p.substitute(variable_index("k_s"), Polynomial(2)), k.pow(2) + Polynomial(2) * k);
  EXPECT_EQ(p.evaluate({{variable_index("k"), 3}, {variable_index("k_s"), Rational(1, 3)}}), Rational(10));
  EXPECT_FALSE(p.evaluate({{variable_index("k"), 3}}));
  EXPECT_DOUBLE_EQ(p.evaluate_double({{variable_index("k"), 0.5}, {variable_index("k_s"), 2.0}}), 1.25);
  auto cs = p.coefficients_in(variable_index("k"));
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[1], s);
  EXPECT_EQ(Polynomial::from_coefficients(variable_index("k"), cs), p);
}

TEST(Scalar, ReducedQuotients) {
  Scalar k = Scalar::variable("k");
  Scalar r = (k * k - Scalar(1)) / (k - Scalar(1));
  EXPECT_EQ(r, k + Scalar(1));
  EXPECT_TRUE(r.denominator().is_constant());
  Scalar h = k / (Scalar(1) + k);
  EXPECT_EQ(h + Scalar(1) / (Scalar(1) + k), Scalar(1));
  EXPECT_EQ(h.inverse(), Scalar(1) + k.inverse());
  EXPECT_EQ(Scalar(2).pow(-3), Scalar(Rational(1, 8)));
  EXPECT_THROW(Scalar(0).inverse(), std::exception);
}

TEST(Scalar, ParseAndPrint) {
  Scalar k = Scalar::variable("k");
  EXPECT_EQ(Scalar::parse("1/2"), Scalar::rational(1, 2));
  EXPECT_EQ(Scalar::parse("(k^2-1)/(2*k)"), (k * k - Scalar(1)) / (Scalar(2) * k));
  EXPECT_EQ(Scalar::parse("k_s + 1"), Scalar::variable("k_s") + Scalar(1));
  EXPECT_EQ(Scalar::parse(Scalar::parse("(k+3)/(k-1)").to_string()), (k + Scalar(3)) / (k - Scalar(1)));
  EXPECT_THROW(Scalar::parse("k +"), std::exception);
}

TEST(Scalar, SubstitutionAndConjugation) {
  Scalar k = Scalar::variable("k");
  Scalar f = k / (Scalar(1) + k);
  EXPECT_EQ(f.substitute({{variable_index("k"), 2}}), Scalar::rational(2, 3));
  EXPECT_EQ(f.substitute({{variable_index("k"), 2}}).rational_value(), Rational(2, 3));
  EXPECT_NEAR(f.evaluate_double({{variable_index("k"), 1.0}}), 0.5, 1e-15);
  Scalar l = Scalar::variable("l1");
  std::uint32_t mask = 1u << variable_index("l1");
  EXPECT_EQ((l + Scalar(1)).negate_variables(mask), Scalar(1) - l);
  EXPECT_THROW(k.rational_value(), std::exception);
}
