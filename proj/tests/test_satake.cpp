#include <gtest/gtest.h>

#include "rootharm/satake.hpp"

using namespace rootharm;

namespace {

Scalar q() { return Scalar::variable("q"); }

Weight w1(int m) {
  Weight w;
  w.c[0] = m;
  return w;
}

LaurentPolynomial x_poly(std::initializer_list<std::pair<int, Scalar>> terms) {
  LaurentPolynomial f;
  for (const auto& [m, c] : terms) f.add_term(w1(m), c);
  return f;
}

}  // namespace

TEST(Satake, PoincarePolynomials) {
  RootDatum a1 = RootDatum::build("A1"), a2 = RootDatum::build("A2"), b2 = RootDatum::build("B2");
  EXPECT_EQ(poincare_polynomial(HeckeParam::symbolic(a1)), Scalar(1) + q());
  EXPECT_EQ(poincare_polynomial(HeckeParam::symbolic(a2)),
            Scalar(1) + Scalar(2) * q() + Scalar(2) * q().pow(2) + q().pow(3));
  // Length generating function of B2 at q=1 and with split parameters.
  EXPECT_EQ(poincare_polynomial(HeckeParam::equal(b2, Scalar(1))), Scalar(8));
  Scalar qs = Scalar::variable("q_s"), ql = Scalar::variable("q_l");
  EXPECT_EQ(poincare_polynomial(HeckeParam::symbolic(b2)), (Scalar(1) + qs) * (Scalar(1) + ql) * (Scalar(1) + qs * ql));
  for (const char* t : {"A2", "G2", "B3"}) {
    RootDatum rd = RootDatum::build(t);
    EXPECT_EQ(poincare_polynomial(HeckeParam::equal(rd, Scalar(1))), Scalar(rd.weyl().size())) << t;
  }
  EXPECT_EQ(stabilizer_poincare(HeckeParam::symbolic(a2), Weight{}), poincare_polynomial(HeckeParam::symbolic(a2)));
}

TEST(Satake, RankOneCFunction) {
  RootDatum rd = RootDatum::build("A1");
  HeckeParam hp = HeckeParam::symbolic(rd);
  CFunction c = c_padic(hp);
  ASSERT_EQ(c.numerator.size(), 1u);
  EXPECT_EQ(c.numerator[0].c, q().inverse());
  EXPECT_EQ(c.denominator[0].c, Scalar(1));
  // c(t) + c(1/t) = 1 + 1/q after clearing (1 - t^-a)(1 - t^a).
  CFunction s = c.act(rd.weyl(), 1);
  LaurentPolynomial lhs = c.expand_numerator() * s.expand_denominator() + s.expand_numerator() * c.expand_denominator();
  LaurentPolynomial rhs = c.expand_denominator() * s.expand_denominator() * (Scalar(1) + q().inverse());
  EXPECT_EQ(lhs, rhs);
  // Numerically at x = 1.7, q = 5.
  std::map<int, double> at{{variable_index("q"), 5.0}};
  EXPECT_NEAR(c.evaluate({1.7}, at) + s.evaluate({1.7}, at), 1.2, 1e-12);
  CFunction trivial = c_padic(HeckeParam::equal(rd, Scalar(1)));
  EXPECT_EQ(trivial.expand_numerator(), trivial.expand_denominator());
}

TEST(Satake, CSumMatchesPoincare) {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    RootDatum rd = RootDatum::build(t);
    EXPECT_TRUE(check_c_sum(HeckeParam::symbolic(rd)).pass) << t;
  }
}

TEST(Satake, RankOneGoldenValues) {
  RootDatum rd = RootDatum::build("A1");
  HeckeParam hp = HeckeParam::symbolic(rd);
  Scalar pw = Scalar(1) + q().inverse();
  EXPECT_EQ(satake_image(w1(0), hp), LaurentPolynomial::constant(Scalar(1)));
  EXPECT_EQ(satake_image(w1(1), hp), x_poly({{1, Scalar(1)}, {-1, Scalar(1)}}) * pw.inverse());
  // lambda = alpha: P_W(1/q) times the image has coefficients in Q[1/q].
  EXPECT_EQ(satake_image(w1(2), hp), x_poly({{2, Scalar(1)}, {0, Scalar(1) - q().inverse()}, {-2, Scalar(1)}}) * pw.inverse());
  // delta^{-1/2}(pi^omega) = q^{-1/2} stays formal.
  LaurentPolynomial sv = spherical_value(w1(1), hp);
  EXPECT_EQ(sv, satake_image(w1(1), hp) * Scalar::variable("sq").inverse());
  EXPECT_EQ(spherical_value(w1(2), hp), satake_image(w1(2), hp) * q().inverse());
  EXPECT_EQ(spherical_value(w1(1), HeckeParam::equal(rd, Scalar(4))),
            satake_image(w1(1), HeckeParam::equal(rd, Scalar(4))) * Scalar(Rational(1, 2)));
}

TEST(Satake, TreeCounts) {
  TreeCount one = count_tree(1, 2);
  EXPECT_EQ(one.sphere, 3);
  EXPECT_EQ(one.levels, (std::vector<long>{2, 1}));
  TreeCount two = count_tree(2, 2);
  EXPECT_EQ(two.sphere, 6);
  EXPECT_EQ(two.levels, (std::vector<long>{4, 1, 1}));
  EXPECT_EQ(count_tree(0, 3).levels, (std::vector<long>{1}));
  // Closed count: q^n at the bottom, (q-1)q^{n-j-1} in between, 1 at the top.
  for (long qq : {2L, 3L, 5L}) {
    for (int n = 1; n <= 5; ++n) {
      TreeCount tc = count_tree(n, qq);
      long sphere = qq + 1;
      for (int j = 1; j < n; ++j) sphere *= qq;
      EXPECT_EQ(tc.sphere, sphere);
      long qn = 1;
      for (int j = 0; j < n; ++j) qn *= qq;
      EXPECT_EQ(tc.levels[0], qn);
      EXPECT_EQ(tc.levels[n], 1);
    }
  }
}

TEST(Satake, TreeOracleAgrees) {
  for (long qq : {2L, 3L}) {
    Report r = check_tree_oracle(5, qq);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
  }
  RootDatum rd = RootDatum::build("A1");
  EXPECT_EQ(tree_oracle(rd, 0, 2), LaurentPolynomial::constant(Scalar(1)));
}

TEST(Satake, SymbolicChecks) {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    RootDatum rd = RootDatum::build(t);
    Report r = check_satake(HeckeParam::symbolic(rd), 2);
    EXPECT_TRUE(r.pass) << t << " " << r.to_json().dump();
  }
  Report num = check_satake(HeckeParam::equal(RootDatum::build("A2"), Scalar(3)), 3);
  EXPECT_TRUE(num.pass) << num.to_json().dump();
}

TEST(Satake, NonReducedNeedsTrivialHalfParameter) {
  RootDatum rd = RootDatum::build("BC1");
  EXPECT_THROW(satake_image(w1(0), HeckeParam::symbolic(rd)), PoleCancellationFailure);
  EXPECT_FALSE(check_c_sum(HeckeParam::symbolic(rd)).pass);
  HeckeParam split(rd, {Scalar(1), q()});
  EXPECT_TRUE(check_c_sum(split).pass);
  EXPECT_EQ(satake_image(w1(0), split), LaurentPolynomial::constant(Scalar(1)));
}
