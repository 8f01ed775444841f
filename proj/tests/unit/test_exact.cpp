#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "packdom/errors.hpp"
#include "packdom/exact.hpp"

using namespace packdom;

namespace {

// Lexicographically first set of the given size that qualifies.
VertexSet lex_first(const Graph& g, int size, int d, int p) {
  const auto dist = oracle::floyd(g);
  const int n = static_cast<int>(g.order());
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if (oracle::valid(dist, idx, d, p)) return VertexSet(idx.begin(), idx.end());
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return {};
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TEST(Exact, SmallKnownValues) {
  // P_5: one centre covers at distance 2.
  const std::vector<Edge> p5{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  Graph g = Graph::from_edges(5, p5);
  auto o = gamma_exact(g, {2, 2});
  ASSERT_TRUE(o.has_value());
  EXPECT_EQ(o.gamma, 1);
  EXPECT_EQ(o.witness, VertexSet{2});
  o = gamma_exact(g, {1, 0});
  EXPECT_EQ(o.gamma, 2);
  EXPECT_EQ(o.witness, (VertexSet{0, 3}));
}

TEST(Exact, InfeasibleAndBudget) {
  // P_7 with d = 1, p = 3: members at distance >= 4 leave a gap.
  const std::vector<Edge> p7{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
  Graph g = Graph::from_edges(7, p7);
  ASSERT_FALSE(oracle::gamma(g, 1, 3).has_value());
  EXPECT_EQ(gamma_exact(g, {1, 3}).status, SolveStatus::kInfeasible);
  EXPECT_EQ(brute_force_gamma(g, {1, 3}).status, SolveStatus::kInfeasible);

  SolveOptions opt;
  opt.budget = 2;
  EXPECT_EQ(gamma_exact(g, {1, 0}, opt).status, SolveStatus::kAboveBudget);
  opt.budget = 3;
  auto o = gamma_exact(g, {1, 0}, opt);
  ASSERT_TRUE(o.has_value());
  EXPECT_EQ(o.gamma, 3);
}

TEST(Exact, RejectsBadParameters) {
  Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  EXPECT_THROW(gamma_exact(g, {-1, 0}), InputError);
  EXPECT_THROW(gamma_exact(g, {1, -1}), InputError);
  EXPECT_THROW(gamma_exact(Graph(0), {1, 0}), InputError);
}

TEST(Exact, TimeoutIsReported) {
  std::mt19937 rng(5);
  Graph g = oracle::random_graph(150, 40, rng);
  SolveOptions opt;
  opt.timeout = std::chrono::milliseconds(0);
  EXPECT_EQ(gamma_exact(g, {1, 0}, opt).status, SolveStatus::kTimeout);
}

TEST(ExactProperty, AgreesWithOracleAndReturnsLexFirstWitness) {
  std::mt19937 rng(21);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + rng() % 11;
    Graph g = oracle::random_graph(n, rng() % 5, rng);
    const int d = 1 + static_cast<int>(rng() % 3);
    const int p = static_cast<int>(rng() % 6);
    const auto expect = oracle::gamma(g, d, p);
    const auto got = gamma_exact(g, {d, p});
    const auto brute = brute_force_gamma(g, {d, p});
    if (!expect) {
      EXPECT_EQ(got.status, SolveStatus::kInfeasible);
      EXPECT_EQ(brute.status, SolveStatus::kInfeasible);
      continue;
    }
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(got.gamma, *expect) << serialize_edge_list(g) << " d=" << d << " p=" << p;
    EXPECT_EQ(brute.gamma, *expect);
    EXPECT_EQ(got.witness, lex_first(g, *expect, d, p));
    EXPECT_EQ(brute.witness, got.witness);
    EXPECT_TRUE(is_d_dominating(g, got.witness, d));
    EXPECT_TRUE(is_p_packing(g, got.witness, p));
  }
}

TEST(ExactProperty, DisconnectedGraphs) {
  std::mt19937 rng(22);
  for (int round = 0; round < 100; ++round) {
    Graph a = oracle::random_tree(1 + rng() % 6, rng);
    Graph b = oracle::random_tree(1 + rng() % 6, rng);
    std::vector<Edge> e = a.edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) e.push_back({u + shift, v + shift});
    Graph g = Graph::from_edges(a.order() + b.order(), e);
    const int d = 1 + static_cast<int>(rng() % 2);
    const int p = static_cast<int>(rng() % 7);
    const auto expect = oracle::gamma(g, d, p);
    const auto got = gamma_exact(g, {d, p});
    if (!expect) {
      EXPECT_EQ(got.status, SolveStatus::kInfeasible);
    } else {
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(got.gamma, *expect);
    }
  }
}

TEST(ExactProperty, PerfectCodesAreExactCovers) {
  std::mt19937 rng(23);
  for (int round = 0; round < 150; ++round) {
    Graph g = oracle::random_graph(1 + rng() % 10, rng() % 4, rng);
    const int d = 1 + static_cast<int>(rng() % 2);
    // A d-perfect code is exactly a d-dominating (2d)-packing.
    const bool exists = oracle::gamma(g, d, 2 * d).has_value();
    const auto code = find_d_perfect_code(g, d);
    EXPECT_EQ(code.has_value(), exists);
    if (code) EXPECT_TRUE(is_d_perfect_code(g, *code, d));
  }
}

TEST(Exact, MaximalTwoPacking) {
  const std::vector<Edge> p6{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  Graph g = Graph::from_edges(6, p6);
  EXPECT_TRUE(is_maximal_2_packing(g, VertexSet{0, 3}));
  EXPECT_FALSE(is_maximal_2_packing(g, VertexSet{0}));
  EXPECT_FALSE(is_maximal_2_packing(g, VertexSet{0, 2}));
}
