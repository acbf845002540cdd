#include <gtest/gtest.h>

#include "rootharm/dunkl.hpp"

using namespace rootharm;

namespace {

Scalar k() { return Scalar::variable("k"); }
Scalar S(long v) { return Scalar(v); }

LaurentPolynomial X(int m, const Scalar& c = Scalar(1)) {
  Weight w;
  w.c[0] = m;
  return LaurentPolynomial::monomial(w, c);
}

}  // namespace

TEST(Dunkl, RankOneOnSmallMonomials) {
  auto rd = RootDatum::build("A1");
  DunklFamily T(Multiplicity::symbolic(rd));
  EXPECT_EQ(T.apply(0, X(0)), X(0, -k()));
  EXPECT_EQ(T.apply(0, X(1)), X(1, S(1) + k()));
  EXPECT_EQ(T.apply(0, X(-1)), X(-1, -(S(1) + k())) + X(1, S(-2) * k()));
}

TEST(Dunkl, ExpressionAgreesWithFastPath) {
  for (const char* label : {"A2", "B2", "BC1"}) {
    auto rd = RootDatum::build(label);
    auto kk = Multiplicity::symbolic(rd);
    DunklFamily T(kk);
    for (int j = 0; j < rd.rank(); ++j) {
      CoVector xi(rd.rank());
      xi[j] = Scalar(1);
      auto op = dunkl_expression(kk, xi);
      for (const auto& nu : truncation_basis(rd, 2)) {
        auto m = LaurentPolynomial::monomial(nu);
        EXPECT_EQ(op.apply(m), T.apply(j, m)) << label;
      }
    }
  }
}

TEST(Dunkl, PolynomialExtension) {
  auto rd = RootDatum::build("A1");
  DunklFamily T(Multiplicity::symbolic(rd));
  SymPoly p = SymPoly::variable(0).pow(2);
  EXPECT_EQ(T.apply(p, X(0)), X(0, k() * k()));
  EXPECT_EQ(T.apply(p, X(1)), X(1, (S(1) + k()) * (S(1) + k())));
  EXPECT_EQ(T.apply(SymPoly::constant(1), X(3)), X(3));
}

TEST(Dunkl, ZeroParameterIsDerivative) {
  auto rd = RootDatum::build("B2");
  DunklFamily T(Multiplicity::constant(rd, 0));
  for (const auto& nu : truncation_basis(rd, 3))
    for (int j = 0; j < 2; ++j)
      EXPECT_EQ(T.apply(j, LaurentPolynomial::monomial(nu)),
                LaurentPolynomial::monomial(nu, Scalar(long(nu.c[j]))));
}

TEST(Dunkl, Triangularity) {
  for (const char* label : {"A1", "A2", "B2", "BC1", "G2"}) {
    auto rd = RootDatum::build(label);
    DunklFamily T(Multiplicity::symbolic(rd));
    EXPECT_TRUE(check_triangularity(T, 3).pass) << label;
  }
}

TEST(Dunkl, Commutativity) {
  for (const char* label : {"A2", "B2", "G2"}) {
    auto rd = RootDatum::build(label);
    DunklFamily T(Multiplicity::symbolic(rd));
    auto rep = check_commutativity(T, 3);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}

TEST(Dunkl, HeckeRelations) {
  for (const char* label : {"A1", "A2", "B2", "BC1"}) {
    auto rd = RootDatum::build(label);
    DunklFamily T(Multiplicity::symbolic(rd));
    auto rep = check_hecke_relations(T, 3);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}

TEST(Dunkl, Adjointness) {
  for (const char* label : {"A1", "A2", "BC1"})
    for (long kv : {0L, 1L, 2L}) {
      auto rd = RootDatum::build(label);
      DunklFamily T(Multiplicity::constant(rd, kv));
      auto rep = check_adjointness(T, 2);
      EXPECT_TRUE(rep.pass) << label << " k=" << kv << " " << rep.to_json().dump();
    }
}

TEST(Dunkl, SymmetricRestriction) {
  auto rd = RootDatum::build("A1");
  DunklFamily T(Multiplicity::symbolic(rd));
  auto D = symmetric_restriction(T, SymPoly::variable(0).pow(2), 3);
  Weight zero;
  EXPECT_EQ(D.entry(zero, zero), k() * k());
  Weight one;
  one.c[0] = 1;
  // eigenvalue on the leading orbit sum is (1 + k)^2
  EXPECT_EQ(D.entry(one, one), (S(1) + k()) * (S(1) + k()));
  EXPECT_THROW(symmetric_restriction(T, SymPoly::variable(0), 2), std::domain_error);
}

TEST(Dunkl, RadialLaplacian) {
  for (const char* label : {"A1", "A2", "BC1", "B2"}) {
    auto rd = RootDatum::build(label);
    DunklFamily T(Multiplicity::symbolic(rd));
    auto rep = check_radial_laplacian(T, 3);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}
