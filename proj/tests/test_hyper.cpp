#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rootharm/hyper.hpp"

using namespace rootharm;

namespace {

// Complete elliptic integral K(m) by the arithmetic-geometric mean.
double elliptic_k(double m) {
  double a = 1, b = std::sqrt(1 - m);
  for (int i = 0; i < 60 && std::abs(a - b) > 1e-17; ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2 * a);
}

}  // namespace

TEST(Hyper, SeriesBasics) {
  EXPECT_EQ(gauss_2f1(0.3, 0.7, 1.2, 0.0).value, Complex(1.0));
  HyperValue poly = gauss_2f1(-1.0, 0.4, 1.7, 0.6);
  EXPECT_EQ(poly.method, "terminating");
  EXPECT_NEAR(poly.value.real(), 1 - 0.4 / 1.7 * 0.6, 1e-15);
  // 2F1(1/2,1/2;1;m) = 2K(m)/pi.
  for (double m : {0.5, 0.1, 0.9}) {
    HyperValue v = gauss_2f1(0.5, 0.5, 1.0, m, 1e-15);
    EXPECT_NEAR(v.value.real(), 2 * elliptic_k(m) / std::numbers::pi, 1e-13) << m;
    EXPECT_LT(v.est_error, 1e-12);
  }
  EXPECT_THROW(gauss_2f1(0.5, 0.5, 1.0, 1.2), DomainError);
  EXPECT_THROW(gauss_2f1(0.5, 0.5, -2.0, 0.2), DomainError);
}

TEST(Hyper, TransformationsAgreeWithElementaryCases) {
  // 2F1(1,1;2;z) = -log(1-z)/z.
  for (double z : {-0.3, -0.9, -2.5, -40.0, -1e6}) {
    HyperValue v = hyp2f1(1.0, 1.0, 2.0, z);
    EXPECT_NEAR(v.value.real(), -std::log1p(-z) / z, 1e-13 * std::abs(std::log1p(-z) / z)) << z << " " << v.method;
  }
  // 2F1(a,b;b;z) = (1-z)^{-a}.
  for (double z : {-0.5, -1.8, -30.0}) {
    HyperValue v = hyp2f1(0.37, 1.25, 1.25, z);
    EXPECT_NEAR(v.value.real(), std::pow(1 - z, -0.37), 1e-12) << z;
  }
}

TEST(Hyper, ArgumentMapSelection) {
  const MapSelection& sel = argument_map_selection();
  EXPECT_EQ(sel.chosen, ArgumentMap::Standard);
  EXPECT_TRUE(sel.standard_ok);
  EXPECT_FALSE(sel.printed_ok);
  EXPECT_LT(sel.standard_residual, 1e-10);
  EXPECT_DOUBLE_EQ(argument(ArgumentMap::Standard, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(argument(ArgumentMap::Printed, 0.0), -0.75);
}

TEST(Hyper, RankOneClosedForms) {
  // mu = omega: F = cosh.
  for (double k : {0.5, 1.0, 2.5}) {
    FValue f = rank1_F({Complex(1 + k, 0), 0, k}, 0.8);
    EXPECT_NEAR(f.value.real(), std::cosh(0.8), 1e-12);
  }
  // k = 1 on A1: F = sinh(lambda s) / (lambda sinh s), for non-integral and complex lambda.
  for (Complex lam : {Complex(0.37, 0), Complex(2.5, 0), Complex(1.2, 0.8), Complex(0, 4.0)}) {
    for (double s : {0.2, 1.3, 3.0, 9.0}) {
      FValue f = rank1_F({lam, 0, 1}, s);
      Complex expect = std::sinh(lam * s) / (lam * std::sinh(s));
      EXPECT_LT(std::abs(f.value - expect), 1e-10 * std::max(1.0, std::abs(expect))) << lam << " " << s << " " << f.method;
    }
  }
}

TEST(Hyper, Symmetries) {
  Rank1Params p{Complex(1.1, 0.6), 0.5, 1.5};
  for (double s : {0.3, 2.2, 6.0}) {
    Rank1Params q = p;
    q.lam = -p.lam;
    Complex u = rank1_F(p, s).value;
    EXPECT_LT(std::abs(u - rank1_F(q, s).value), 1e-10 * std::abs(u));
    EXPECT_LT(std::abs(u - rank1_F(p, -s).value), 1e-10 * std::abs(u));
  }
  EXPECT_NEAR(std::abs(rank1_F(p, 0.0).value - 1.0), 0.0, 1e-14);
}

TEST(Hyper, CFunction) {
  RootDatum a1 = RootDatum::build("A1"), bc1 = RootDatum::build("BC1");
  CValue c = c_numeric(a1, {1.0}, {Complex(3, 0)}, CVariant::Normalized);
  EXPECT_NEAR(c.value.real(), 1.0 / 3, 1e-14);
  EXPECT_NEAR(c_numeric(a1, {0.0}, {Complex(2.2, 0.4)}, CVariant::Normalized).value.real(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(c_numeric(bc1, {0.5, 1.5}, {Complex(1.75, 0)}, CVariant::Normalized).value - 1.0), 0, 1e-13);
  LimitEstimate lim = c_limit({Complex(3, 0), 0, 1});
  EXPECT_NEAR(lim.extrapolated.real(), 1.0 / 3, 1e-6);
  for (const auto& p : std::vector<Rank1Params>{{Complex(2.3, 0), 0, 0.7}, {Complex(2.5, 0), 0, 0.7},
                                                {Complex(1.8, 0), 0.5, 1.2}}) {
    CValue g = p.k1 == 0 ? c_numeric(a1, {p.k2}, {p.lam}, CVariant::Normalized)
                         : c_numeric(bc1, {p.k1, p.k2}, {p.lam}, CVariant::Normalized);
    EXPECT_NEAR(std::abs(g.value - c_limit(p).extrapolated), 0, 1e-6) << p.lam;
  }
  EXPECT_TRUE(c_numeric(a1, {1.0}, {Complex(-2, 0)}, CVariant::Tilde).near_pole);
}

TEST(Hyper, Report) {
  Report r = check_hyper_rank1();
  EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}
