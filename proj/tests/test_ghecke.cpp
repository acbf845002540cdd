#include <gtest/gtest.h>

#include "rootharm/ghecke.hpp"

using namespace rootharm;

namespace {

Scalar k() { return Scalar::variable("k"); }

std::uint32_t spectral_mask(int rank) {
  std::uint32_t m = 0;
  for (int j = 0; j < rank; ++j) m |= 1u << variable_index("l" + std::to_string(j + 1));
  return m;
}

HeckeElement y(int j) { return HeckeElement::polynomial(SymPoly::variable(j)); }

}  // namespace

TEST(GradedHecke, RankOneCommutation) {
  auto rd = RootDatum::build("A1");
  GradedHeckeAlgebra H(Multiplicity::symbolic(rd));
  auto s = HeckeElement::group(rd.weyl().simple(0));
  auto expected = HeckeElement::term(-SymPoly::variable(0), s.terms().begin()->first) +
                  HeckeElement::polynomial(SymPoly::constant(Scalar(-2) * k()));
  EXPECT_EQ(H.multiply(s, y(0)), expected);

  auto ys = H.multiply(y(0), s);
  auto sq = H.multiply(ys, ys);
  auto want = HeckeElement::polynomial(-SymPoly::variable(0).pow(2)) +
              HeckeElement::term(Scalar(-2) * k() * SymPoly::variable(0), rd.weyl().simple(0));
  EXPECT_EQ(sq, want);
}

TEST(GradedHecke, InvariantsAreCentral) {
  for (const char* label : {"A1", "A2", "B2"}) {
    auto rd = RootDatum::build(label);
    GradedHeckeAlgebra H(Multiplicity::symbolic(rd));
    EXPECT_TRUE(H.is_central(HeckeElement::polynomial(squared_norm_polynomial(rd))).pass) << label;
    EXPECT_FALSE(H.is_central(y(0)).pass) << label;
  }
}

TEST(GradedHecke, RightFormRoundTrip) {
  auto rd = RootDatum::build("B2");
  GradedHeckeAlgebra H(Multiplicity::symbolic(rd));
  std::mt19937 rng(3);
  for (int n = 0; n < 5; ++n) {
    auto a = H.random_element(rng, 2, 3);
    HeckeElement back;
    for (const auto& [w, q] : H.right_form(a))
      back += H.multiply(HeckeElement::group(w), HeckeElement::polynomial(q));
    EXPECT_EQ(back, a);
  }
}

TEST(GradedHecke, AlgebraAxioms) {
  for (const char* label : {"A1", "A2", "B2", "BC1"}) {
    auto rd = RootDatum::build(label);
    GradedHeckeAlgebra H(Multiplicity::symbolic(rd));
    auto rep = H.datum().rank() > 1 ? check_algebra_axioms(H, 7, 4) : check_algebra_axioms(H, 7, 10);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}

TEST(GradedHecke, PairingInvariance) {
  for (const char* label : {"A1", "A2", "B2", "BC1"}) {
    auto rd = RootDatum::build(label);
    GradedHeckeAlgebra H(Multiplicity::symbolic(rd));
    auto rep = check_pairing_invariance(H, spectral_mask(rd.rank()));
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}

TEST(GradedHecke, PairingFailsWithoutConjugation) {
  // with lambda treated as real the bullet-type pairing breaks for generic lambda
  auto rd = RootDatum::build("A1");
  GradedHeckeAlgebra H(Multiplicity::symbolic(rd));
  EXPECT_FALSE(check_pairing_invariance(H, 0).pass);
}

TEST(GradedHecke, EtaIsAHomomorphism) {
  for (const char* label : {"A1", "BC1", "A2", "B2"}) {
    auto rd = RootDatum::build(label);
    auto kk = Multiplicity::symbolic(rd);
    GradedHeckeAlgebra H(kk);
    DunklFamily T(kk);
    auto rep = check_eta_compatibility(H, T, rd.rank() == 1 ? 3 : 1, 11, 3);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}

TEST(GradedHecke, EtaFaithfulOnLowDegree) {
  for (const char* label : {"A1", "A2", "B2"}) {
    auto rd = RootDatum::build(label);
    auto rep = check_eta_injective(Multiplicity::parse(rd, "1/3"), 2, 3);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}

TEST(GradedHecke, SphericalModuleDimensions) {
  auto rd = RootDatum::build("A2");
  GradedHeckeAlgebra H(Multiplicity::symbolic(rd));
  Weight w1;
  w1.c[0] = 1;
  EXPECT_EQ(InducedModule::spherical(H, w1).dimension(), 3);
  EXPECT_EQ(InducedModule::spherical(H, Weight{}).dimension(), 1);
  Weight reg;
  reg.c[0] = reg.c[1] = 1;
  EXPECT_EQ(InducedModule::spherical(H, reg).dimension(), 6);
}

TEST(GradedHecke, ESpanModules) {
  struct Case {
    const char* label;
    std::array<int, kMaxRank> lambda;
  };
  for (const Case& c : {Case{"A1", {1}}, Case{"A1", {0}}, Case{"A1", {2}}, Case{"BC1", {1}},
                        Case{"A2", {1, 0}}, Case{"B2", {0, 1}}}) {
    auto rd = RootDatum::build(c.label);
    auto kk = Multiplicity::symbolic(rd);
    GradedHeckeAlgebra H(kk);
    JacobiSystem J(kk);
    Weight lambda;
    lambda.c = c.lambda;
    auto rep = check_e_span_module(H, J, lambda);
    EXPECT_TRUE(rep.pass) << c.label << " " << rep.to_json().dump();
  }
}

namespace rootharm {
void PrintTo(const HeckeElement& a, std::ostream* os) {
  *os << a.to_string(RootDatum::build("A1").weyl());
}
}  // namespace rootharm
