#include <gtest/gtest.h>

#include <chrono>

#include "rootharm/shift.hpp"

using namespace rootharm;

namespace {

LaurentPolynomial X(int m, const Scalar& c = Scalar(1)) {
  Weight w;
  w.c[0] = m;
  return LaurentPolynomial::monomial(w, c);
}

Scalar var(const char* name) { return Scalar::variable(name); }

}  // namespace

TEST(Shift, PiPolynomials) {
  auto a1 = RootDatum::build("A1");
  EXPECT_EQ(pi_polynomial(Multiplicity::symbolic(a1), 1),
            SymPoly::variable(0) + SymPoly::constant(var("k")));
  auto bc1 = RootDatum::build("BC1");
  EXPECT_EQ(pi_polynomial(Multiplicity::symbolic(bc1), 1),
            SymPoly::variable(0) + SymPoly::constant(var("k_l") + var("k_s") * Scalar::rational(1, 2)));
  auto a2 = RootDatum::build("A2");
  EXPECT_EQ(pi_polynomial(Multiplicity::symbolic(a2), -1).degree(), 3);
}

TEST(Shift, HeckmanRankOne) {
  auto rd = RootDatum::build("A1");
  auto k = Multiplicity::symbolic(rd);
  EXPECT_EQ(heckman_apply(1, k, X(1) + X(-1)), X(0));
  EXPECT_TRUE(heckman_apply(1, k, X(0)).is_zero());
  // T(y,j)(X - X^{-1}) = (1+3j)X + (1+j)X^{-1}, minus j(X - X^{-1}), with j = k-1
  Scalar c = Scalar(2) * var("k") - Scalar(1);
  EXPECT_EQ(heckman_apply(-1, k, X(0)), X(1, c) + X(-1, c));
}

TEST(Shift, HeckmanTransmutation) {
  for (const char* label : {"A1", "BC1", "A2"}) {
    auto rd = RootDatum::build(label);
    auto k = Multiplicity::symbolic(rd);
    int h = rd.rank() == 1 ? 5 : 3;
    for (int sign : {1, -1}) {
      auto g = heckman_shift(sign, k, h);
      auto rep = check_heckman_shift(g, h);
      EXPECT_TRUE(rep.pass) << label << sign << " " << rep.to_json().dump();
    }
  }
}

TEST(Shift, ClosedFormValues) {
  auto rd = RootDatum::build("BC1");
  auto k = Multiplicity::symbolic(rd);
  auto s = rank1_closed_form(ClosedFormKind::Basic, k);
  EXPECT_TRUE(s.apply(X(0)).is_zero());
  EXPECT_TRUE(s.apply(X(1)).is_zero());
  EXPECT_EQ(s.apply(X(-1)), X(0));
  auto up = rank1_closed_form(ClosedFormKind::PlusTwoMinusOne, k);
  EXPECT_EQ(up.apply(X(0)), X(0, var("k_l") - Scalar::rational(1, 2)));
  auto down = rank1_closed_form(ClosedFormKind::MinusTwoPlusOne, k);
  EXPECT_EQ(down.apply(X(0)), X(0, var("k_l") + var("k_s") - Scalar::rational(1, 2)));
}

TEST(Shift, ClosedFormsTransmute) {
  auto rd = RootDatum::build("BC1");
  auto k = Multiplicity::symbolic(rd);
  for (auto which : {ClosedFormKind::Basic, ClosedFormKind::PlusTwoMinusOne, ClosedFormKind::MinusTwoPlusOne}) {
    auto rep = check_closed_form(rank1_closed_form(which, k), 6);
    EXPECT_TRUE(rep.pass) << static_cast<int>(which) << " " << rep.to_json().dump();
  }
  auto a1 = RootDatum::build("A1");
  EXPECT_TRUE(check_closed_form(rank1_closed_form(ClosedFormKind::Basic, Multiplicity::symbolic(a1)), 6).pass);
}

TEST(Shift, SolvedMatchesClosedForm) {
  for (const char* label : {"A1", "BC1"}) {
    auto rd = RootDatum::build(label);
    auto s = nonsymmetric_shift(Multiplicity::symbolic(rd), 6);
    EXPECT_EQ(s.certificate["kernel_dimension"], 0);
    auto rep = compare_with_closed_form(s, 6);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
    auto chk = check_nonsymmetric_shift(s, 6);
    EXPECT_TRUE(chk.pass) << label << " " << chk.to_json().dump();
  }
}

TEST(Shift, SolvedOnA2) {
  auto rd = RootDatum::build("A2");
  auto t0 = std::chrono::steady_clock::now();
  auto s = nonsymmetric_shift(Multiplicity::symbolic(rd), 2);
  auto rep = check_nonsymmetric_shift(s, 2);
  EXPECT_TRUE(rep.pass) << rep.to_json().dump();
  std::cerr << "A2 h=2: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
}

TEST(Shift, AdjointRoutesAgree) {
  auto rd = RootDatum::build("A1");
  for (int kv : {1, 2}) {
    auto k = Multiplicity::constant(rd, Scalar(kv));
    auto gram = adjoint_shift(ShiftKind::LowerBullet, k, 3, AdjointRoute::Gram);
    auto ebasis = adjoint_shift(ShiftKind::LowerBullet, k, 3, AdjointRoute::EBasis);
    auto diff = gram.matrix.first_difference(ebasis.matrix);
    EXPECT_FALSE(diff.has_value()) << kv;
    auto rep = check_adjoint_shift(gram, 3);
    EXPECT_TRUE(rep.pass) << rep.to_json().dump();
  }
}

TEST(Shift, AdjointLeftRestriction) {
  for (const char* label : {"A1", "BC1"}) {
    auto rd = RootDatum::build(label);
    for (int kv : {1, 2}) {
      auto k = Multiplicity::constant(rd, Scalar(kv));
      for (auto kind : {ShiftKind::LowerBullet, ShiftKind::LowerTilde}) {
        auto lower = adjoint_shift(kind, k, 3);
        auto rep = check_adjoint_shift(lower, 3);
        EXPECT_TRUE(rep.pass) << label << kv << " " << rep.to_json().dump();
      }
    }
  }
}

TEST(Shift, AdjointSymbolic) {
  auto rd = RootDatum::build("A1");
  auto lower = adjoint_shift(ShiftKind::LowerBullet, Multiplicity::symbolic(rd), 3);
  auto rep = check_adjoint_shift(lower, 3);
  EXPECT_TRUE(rep.pass) << rep.to_json().dump();
}

TEST(Shift, Compositions) {
  for (const char* label : {"A1", "BC1"}) {
    auto rd = RootDatum::build(label);
    auto rep = composition_identities(Multiplicity::symbolic(rd), 4);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}

TEST(Shift, LoweringDoesNotExist) {
  for (const char* label : {"A1", "BC1"}) {
    auto rd = RootDatum::build(label);
    auto rep = nonexistence_probe(Multiplicity::symbolic(rd), 3);
    EXPECT_TRUE(rep.pass) << label << " " << rep.to_json().dump();
  }
}
