#include <gtest/gtest.h>

#include <set>

#include "rootharm/rootdata.hpp"

using namespace rootharm;

namespace {

Weight wt(std::initializer_list<int> c) {
  Weight w;
  int i = 0;
  for (int x : c) w.c[i++] = x;
  return w;
}

}  // namespace

TEST(RootData, RankOne) {
  RootDatum a1 = RootDatum::build("A1");
  EXPECT_EQ(a1.roots().size(), 2u);
  EXPECT_EQ(a1.positive_roots().size(), 1u);
  EXPECT_EQ(a1.positive_unmultipliable().size(), 1u);
  EXPECT_EQ(a1.simple_roots()[0], wt({2}));  // alpha = 2 * (alpha/2)
  EXPECT_TRUE(a1.is_reduced());

  RootDatum bc1 = RootDatum::build("BC", 1);
  EXPECT_EQ(bc1.roots().size(), 4u);
  EXPECT_FALSE(bc1.is_reduced());
  EXPECT_GE(bc1.root_index(wt({1})), 0);
  EXPECT_GE(bc1.root_index(wt({-2})), 0);
  ASSERT_EQ(bc1.positive_unmultipliable().size(), 1u);
  EXPECT_EQ(bc1.roots()[bc1.positive_unmultipliable()[0]].weight, wt({2}));
  EXPECT_EQ(bc1.weyl().size(), 2);
}

TEST(RootData, WeylGroupSizes) {
  const std::vector<std::tuple<const char*, int, int, int>> cases = {
      {"A2", 6, 6, 3}, {"B2", 8, 8, 4}, {"C2", 8, 8, 4}, {"G2", 12, 12, 6},
      {"BC2", 8, 12, 4}, {"A3", 24, 12, 6}, {"B3", 48, 18, 9}, {"F4", 1152, 48, 24}};
  for (const auto& [label, order, roots, longest] : cases) {
    RootDatum rd = RootDatum::build(label);
    EXPECT_EQ(rd.weyl().size(), order) << label;
    EXPECT_EQ(static_cast<int>(rd.roots().size()), roots) << label;
    EXPECT_EQ(rd.weyl().length(rd.weyl().longest()), longest) << label;
  }
}

TEST(RootData, Axioms) {
  for (const char* label : {"A2", "B2", "G2", "BC1", "BC2", "C3"}) {
    RootDatum rd = RootDatum::build(label);
    for (int a = 0; a < static_cast<int>(rd.roots().size()); ++a) {
      for (const auto& b : rd.roots()) EXPECT_GE(rd.root_index(rd.reflect(a, b.weight)), 0) << label;
      const Root& r = rd.roots()[a];
      Weight twice = r.weight * 2;
      EXPECT_EQ(r.multipliable, rd.root_index(twice) >= 0) << label;
      if (r.multipliable) EXPECT_FALSE(rd.is_reduced());
      EXPECT_EQ(rd.pair(r.weight, a), 2) << label;
      for (int i = 0; i < rd.rank(); ++i) {
        Weight fund;
        fund.c[i] = 1;
        int v = rd.pair(fund, a);
        EXPECT_EQ(v, r.coroot[i]) << label;
      }
    }
    // Orbits are W-stable.
    const WeylGroup& W = rd.weyl();
    for (int w = 0; w < W.size(); ++w)
      for (const auto& r : rd.roots()) EXPECT_EQ(rd.roots()[rd.root_index(W.act(w, r.weight))].orbit, r.orbit);
  }
}

TEST(RootData, Rho) {
  RootDatum a1 = RootDatum::build("A1");
  Scalar k = Scalar::variable("k");
  EXPECT_EQ(Multiplicity::symbolic(a1).rho()[0], k);
  RootDatum bc1 = RootDatum::build("BC1");
  Scalar ks = Scalar::variable("k_s"), kl = Scalar::variable("k_l");
  EXPECT_EQ(Multiplicity::symbolic(bc1).rho()[0], kl + ks * Scalar::rational(1, 2));
  RootDatum a2 = RootDatum::build("A2");
  Spectral rho = Multiplicity::constant(a2, Scalar(1)).rho();
  EXPECT_EQ(rho, (Spectral{Scalar(1), Scalar(1)}));
}

TEST(RootData, LongestCosetElements) {
  RootDatum a1 = RootDatum::build("A1");
  EXPECT_EQ(a1.w_mu(wt({1})), a1.weyl().identity());
  EXPECT_EQ(a1.w_mu(wt({0})), a1.weyl().longest());
  EXPECT_EQ(a1.w_mu(wt({-1})), a1.weyl().simple(0));
  RootDatum a2 = RootDatum::build("A2");
  EXPECT_EQ(a2.w_mu(wt({1, 1})), a2.weyl().identity());
  EXPECT_EQ(a2.w_mu(Weight{}), a2.weyl().longest());
  for (const auto& mu : a2.orbit(wt({1, 0}))) EXPECT_EQ(a2.weyl().act(a2.w_mu(mu), a2.dominant(mu)), mu);
}

TEST(RootData, OrderIdeals) {
  RootDatum a1 = RootDatum::build("A1");
  EXPECT_EQ(a1.order_ideal(wt({1})), (std::vector<Weight>{wt({0}), wt({1})}));
  EXPECT_EQ(a1.order_ideal(wt({-1})), (std::vector<Weight>{wt({0}), wt({1}), wt({-1})}));
  EXPECT_EQ(a1.order_ideal(Weight{}), (std::vector<Weight>{Weight{}}));
  EXPECT_TRUE(a1.triangular_less(wt({1}), wt({-1})));
  EXPECT_FALSE(a1.triangular_less(wt({-1}), wt({1})));
  RootDatum a2 = RootDatum::build("A2");
  std::vector<Weight> ideal = a2.order_ideal(wt({-1, 2}));
  EXPECT_EQ(ideal.back(), wt({-1, 2}));
  std::set<Weight> seen;
  for (const auto& nu : ideal) {
    for (const auto& prev : seen) EXPECT_FALSE(a2.triangular_less(nu, prev));
    seen.insert(nu);
  }
  EXPECT_EQ(a2.dominant_of_height(1).size(), 3u);
  EXPECT_EQ(a2.height(wt({-1, 2})), 2);
}

TEST(RootData, Multiplicities) {
  RootDatum bc1 = RootDatum::build("BC1");
  Multiplicity k = Multiplicity::parse(bc1, "1,2");
  EXPECT_EQ(k.simple_parameter(0), Scalar::rational(5, 2));
  EXPECT_EQ(k.shifted(1).values(), (std::vector<Scalar>{Scalar(1), Scalar(3)}));
  EXPECT_TRUE(k.is_nonnegative_integer());
  EXPECT_THROW(Multiplicity(bc1, {Scalar(1)}), std::invalid_argument);
  EXPECT_THROW(RootDatum::build("Q7"), std::exception);
}
