#include <gtest/gtest.h>

#include "coverkit/constructors.hpp"
#include "coverkit/error.hpp"
#include "coverkit/schreier.hpp"
#include "oracles.hpp"

using namespace coverkit;

TEST(Schreier, GraphRoundTrip) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 8 + static_cast<int>(s % 30);
    const auto g = simple_pairing_sample(n, s);
    ASSERT_TRUE(g.has_value());
    if (!is_connected(*g)) continue;
    const ActionFromGraph af = graph_to_action(*g);
    EXPECT_NO_THROW(af.action.validate());
    EXPECT_TRUE(af.action.transitive());
    EXPECT_EQ(af.point_of_vertex[af.base_circuit.vertices.front()], af.action.base);
    EXPECT_TRUE(isomorphic_under(*g, action_to_graph(af.action), af.point_of_vertex));
  }
}

TEST(Schreier, MinLengthEqualsGirthAndBruteForce) {
  for (std::uint64_t s = 100; s < 130; ++s) {
    const auto g = simple_pairing_sample(12 + static_cast<int>(s % 20), s);
    ASSERT_TRUE(g.has_value());
    if (!is_connected(*g)) continue;
    const int gi = girth(*g).girth;
    const ActionFromGraph af = graph_to_action(*g);
    const SubgroupLength sl = min_subgroup_length(af.action, 12);
    EXPECT_EQ(sl.length, gi);
    EXPECT_TRUE(contains(af.action, sl.witness));
    EXPECT_EQ(sl.witness.str(), oracle::brute_min_stabilizer(af.action, gi));
  }
}

TEST(Schreier, AnchoredCircuitSpellsPowerOfX) {
  const Certified c = lps_like(5);
  const ActionFromGraph af = graph_to_action(c.graph, c.cert.witness);
  const SubgroupLength sl = min_subgroup_length(af.action, 8);
  EXPECT_EQ(sl.length, c.cert.girth);
  EXPECT_EQ(sl.witness.str(), std::string(c.cert.girth, 'x'));
}

TEST(Schreier, MinLengthExhausts) {
  SchreierAction a;
  a.n = 1;
  a.x = {0};
  a.y = {0};
  EXPECT_EQ(min_subgroup_length(a, 3).length, 1);
  // Free action of Z^2 on a large torus: nothing short fixes the base.
  const int side = 20;
  SchreierAction t;
  t.n = side * side;
  for (int p = 0; p < t.n; ++p) {
    t.x.push_back((p / side) * side + (p % side + 1) % side);
    t.y.push_back((p + side) % t.n);
  }
  EXPECT_EQ(min_subgroup_length(t, 4).witness.str(), "xyXY");
  SchreierAction cyc;
  cyc.n = 30;
  for (int p = 0; p < 30; ++p) {
    cyc.x.push_back((p + 1) % 30);
    cyc.y.push_back((p + 29) % 30);
  }
  EXPECT_EQ(min_subgroup_length(cyc, 4).length, 2);  // xy
  SchreierAction big;
  big.n = 64;
  for (int p = 0; p < 64; ++p) {
    big.x.push_back((p + 1) % 64);
    big.y.push_back((p + 8) % 64);
  }
  EXPECT_THROW(min_subgroup_length(big, 3), ExhaustedError);
}

TEST(Schreier, StabilizingWordsShortlexAndFiltered) {
  const Certified c = lps_like(5);
  const ActionFromGraph af = graph_to_action(c.graph, c.cert.witness);
  const FreeWord w(std::string(5, 'x'));
  const auto all = stabilizing_words(af.action, 7, FreeWord(), 100);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front(), w);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].length(), all[i].length());
  for (const auto& s : stabilizing_words(af.action, 7, w, 100)) {
    EXPECT_NE(s, w);
    EXPECT_NE(s, w.inverse());
    EXPECT_TRUE(contains(af.action, s));
  }
}

TEST(Tower, BoundsMatchRecurrenceOracle) {
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 3; ++m)
      for (int r = 1; r <= 3; ++r) {
        const auto o = oracle::tower_recurrence(k, m, r);
        if (o.n.back() > 100000) continue;
        const PermTower t(k, m, r);
        EXPECT_EQ(t.l_bounds(), o.l);
        EXPECT_EQ(t.n_bounds(), o.n);
        EXPECT_EQ(t.degree(), t.degree_closed_form());
      }
}

TEST(Tower, FrozenDegrees) {
  EXPECT_EQ(PermTower(3, 2, 2).degree(), 1023);
  EXPECT_EQ(PermTower(1, 1, 1).degree(), 7);
  EXPECT_EQ(PermTower(2, 1, 1).degree(), 14);
  EXPECT_EQ(PermTower(1, 1, 1).l_bounds().back(), 3);
  // The printed closed form disagrees with the recurrences.
  EXPECT_GT(std::abs(PermTower(3, 2, 2).degree_printed_form() - 1023.0), 1.0);
  EXPECT_THROW(PermTower(4, 3, 6), PreconditionError);
}

TEST(Tower, RelationsAndMinimalXPower) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 2; ++m)
      for (int r = 1; r <= 2; ++r) {
        const PermTower t(k, m, r);
        const TowerCheck c = check_tower(t);
        EXPECT_TRUE(c.ok()) << k << m << r;
        EXPECT_EQ(c.points_checked, t.degree());
        const SchreierAction h = stabilizer_action_Hk(t);
        EXPECT_NO_THROW(h.validate());
        EXPECT_TRUE(h.transitive());
        EXPECT_EQ(min_x_power(h, t.degree()), k);
      }
}

TEST(Tower, PowersInvert) {
  const PermTower t(2, 2, 2);
  for (long x = 1; x <= t.degree(); ++x)
    for (int part = 0; part <= 2; ++part) {
      EXPECT_EQ(t.sigma(part, t.sigma(part, x, 3), -3), x);
      EXPECT_EQ(t.tau(part, t.tau(part, x, -2), 2), x);
    }
}
