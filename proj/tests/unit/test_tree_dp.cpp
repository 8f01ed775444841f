#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "packdom/errors.hpp"
#include "packdom/exact.hpp"
#include "packdom/tree_dp.hpp"

using namespace packdom;

TEST(TreeDp, Paths) {
  for (std::size_t n = 1; n <= 30; ++n) {
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v});
    Graph g = Graph::from_edges(n, e);
    // Closed-form values for paths: d-domination needs ceil(n/(2d+1)).
    for (int d = 1; d <= 3; ++d) {
      auto o = gamma_tree(g, {d, 0});
      ASSERT_TRUE(o.has_value());
      EXPECT_EQ(o.gamma, static_cast<int>((n + 2 * d) / (2 * d + 1))) << n << " " << d;
    }
  }
}

TEST(TreeDp, RejectsNonTrees) {
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_THROW(gamma_tree(Graph::from_edges(3, tri), {1, 0}), InputError);
}

TEST(TreeDp, LargeStarIsFast) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < 5000; ++v) e.push_back({0, v});
  Graph g = Graph::from_edges(5000, e);
  auto o = gamma_tree(g, {1, 2});
  ASSERT_TRUE(o.has_value());
  EXPECT_EQ(o.gamma, 1);
  EXPECT_EQ(min_distance_dominating_tree(g, 1).gamma, 1);
}

TEST(TreeDpProperty, MatchesOracle) {
  std::mt19937 rng(31);
  for (int round = 0; round < 600; ++round) {
    const std::size_t n = 1 + rng() % 13;
    Graph t = oracle::random_tree(n, rng);
    const int d = 1 + static_cast<int>(rng() % 4);
    const int p = static_cast<int>(rng() % 9);
    const auto expect = oracle::gamma(t, d, p);
    const auto got = gamma_tree(t, {d, p});
    if (!expect) {
      EXPECT_EQ(got.status, SolveStatus::kInfeasible) << serialize_edge_list(t) << d << p;
      continue;
    }
    ASSERT_TRUE(got.has_value()) << serialize_edge_list(t) << " d=" << d << " p=" << p;
    EXPECT_EQ(got.gamma, *expect) << serialize_edge_list(t) << " d=" << d << " p=" << p;
    EXPECT_EQ(static_cast<int>(got.witness.size()), got.gamma);
    EXPECT_TRUE(is_d_dominating(t, got.witness, d));
    EXPECT_TRUE(is_p_packing(t, got.witness, p));
  }
}
