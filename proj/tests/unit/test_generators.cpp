#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "packdom/bounds.hpp"
#include "packdom/errors.hpp"
#include "packdom/generators.hpp"
#include "packdom/tree_dp.hpp"

using namespace packdom;

TEST(Generators, BasicShapes) {
  EXPECT_EQ(make_path(1).order(), 1U);
  EXPECT_EQ(make_path(5).size(), 4U);
  Graph star = make_star(4);
  EXPECT_EQ(star.order(), 5U);
  EXPECT_EQ(star.degree(0), 4U);
  Graph c = make_cycle(6);
  EXPECT_EQ(c.size(), 6U);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(c.degree(v), 2U);
  EXPECT_THROW(make_cycle(2), InputError);
  Graph sp = make_spider(3, 2);
  EXPECT_EQ(sp.order(), 7U);
  EXPECT_EQ(sp.degree(0), 3U);
  const std::vector<std::size_t> legs{1, 2, 3};
  EXPECT_EQ(make_spider(legs).order(), 7U);
}

TEST(Generators, TdSpidersAreInTd) {
  for (int d = 1; d <= 3; ++d) {
    const std::vector<std::size_t> mult{0, 1, 2};
    Graph t = make_Td_spider(d, mult);
    EXPECT_TRUE(is_tree(t));
    EXPECT_TRUE(in_family_Td(t, d));
    EXPECT_EQ(t.order(), 1 + 3 * static_cast<std::size_t>(d) + 3 * (2 * d + 1));
  }
  const std::vector<std::size_t> one{0};
  EXPECT_THROW(make_Td_spider(2, one), InputError);
}

TEST(Generators, ExtremalTreeOrderAndValue) {
  for (int d = 2; d <= 3; ++d) {
    for (int s = 1; s <= 2; ++s) {
      Graph t = make_fig3_tree(d, s);
      const std::size_t n = static_cast<std::size_t>((d * s + 1) * (d * s + 1));
      EXPECT_EQ(t.order(), n);
      EXPECT_TRUE(is_tree(t));
      EXPECT_EQ(gamma_tree(t, {d, 2}).gamma, 1 + d * s * s);
      if (n <= 16) {
        EXPECT_EQ(*oracle::gamma(t, d, 2), 1 + d * s * s);
      }
    }
  }
}

TEST(Generators, SpanningTreeGadgetValues) {
  for (int p = 2; p <= 3; ++p) {
    Family gp = make_gp(p);
    Family gpp = make_gp_prime(p);
    EXPECT_EQ(*oracle::gamma(gp.graph, 2, 2), 1);
    EXPECT_EQ(*oracle::gamma(gpp.graph, 2, 2), 1 + p);
    auto e2 = gpp.edge("e2");
    EXPECT_EQ(*oracle::gamma(gpp.graph.without_edge(e2.first, e2.second), 2, 2), 2);
    auto e1 = gp.edge("e1");
    EXPECT_TRUE(gp.graph.has_edge(e1.first, e1.second));
    EXPECT_EQ(gp.graph.role(e1.first).value(), "u1");
  }
  Family h = make_hp(2);
  EXPECT_EQ(*oracle::gamma(h.graph, 2, 2), 5);
  auto e = h.edge("e");
  EXPECT_EQ(*oracle::gamma(h.graph.without_edge(e.first, e.second), 2, 2), 4);
  EXPECT_THROW(h.edge("missing"), InputError);
}

TEST(Generators, PrueferDecoding) {
  const std::vector<Vertex> code{3, 3, 3, 4};
  Graph t = tree_from_pruefer(code, 6);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
  const std::vector<Vertex> bad{7};
  EXPECT_THROW(tree_from_pruefer(bad, 3), InputError);
}

TEST(GeneratorsProperty, PrueferDegreesMatchMultiplicity) {
  std::mt19937 rng(71);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = static_cast<Vertex>(rng() % n);
    Graph t = tree_from_pruefer(code, n);
    ASSERT_TRUE(is_tree(t));
    for (Vertex v = 0; v < n; ++v)
      EXPECT_EQ(t.degree(v), 1 + static_cast<std::size_t>(std::count(code.begin(), code.end(), v)));
  }
}

TEST(GeneratorsProperty, RandomGraphsAreSeededAndConnected) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 25;
    Graph t = random_tree(n, seed);
    EXPECT_TRUE(is_tree(t));
    EXPECT_EQ(t, random_tree(n, seed));
    Graph g = random_connected_graph(n, 4, seed);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.size(), std::min(n - 1 + 4, n * (n - 1) / 2));
    EXPECT_EQ(g, random_connected_graph(n, 4, seed));
  }
}

TEST(Generators, RandomTreesLookUniform) {
  // 4^2 = 16 labelled trees on 4 vertices; 16000 draws.
  std::map<std::vector<Edge>, int> seen;
  for (std::uint64_t seed = 0; seed < 16000; ++seed) ++seen[random_tree(4, seed).edges()];
  EXPECT_EQ(seen.size(), 16U);
  for (const auto& [edges, count] : seen) {
    EXPECT_GT(count, 800);
    EXPECT_LT(count, 1200);
  }
}

TEST(Generators, EnumerationCountsCayley) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::vector<Edge>> trees;
    std::size_t visits = 0;
    enumerate_trees(n, [&](const Graph& t) {
      ++visits;
      EXPECT_TRUE(is_tree(t));
      trees.insert(t.edges());
    });
    std::size_t cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    EXPECT_EQ(visits, cayley);
    EXPECT_EQ(trees.size(), cayley);
  }
}
