#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "packdom/errors.hpp"
#include "packdom/graph.hpp"

using namespace packdom;

namespace {

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v});
  return Graph::from_edges(n, e);
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> range{{0, 3}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(3, loop), InputError);
  EXPECT_THROW(Graph::from_edges(3, range), InputError);
  EXPECT_THROW(Graph::from_edges(3, dup), InputError);
}

TEST(Graph, NeighboursSortedAndEdgesCanonical) {
  const std::vector<Edge> e{{3, 0}, {0, 2}, {1, 0}};
  Graph g = Graph::from_edges(4, e);
  ASSERT_EQ(g.degree(0), 3U);
  EXPECT_EQ(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()),
            (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(g.size(), 3U);
  EXPECT_FALSE(g.without_edge(0, 2).has_edge(2, 0));
  EXPECT_THROW(g.without_edge(1, 2), InputError);
}

TEST(Graph, EdgeListRoundTripKeepsRoles) {
  Graph g = path(4).with_roles({{0, "literal:+:1"}, {3, "clause:0"}});
  const std::string text = serialize_edge_list(g);
  Graph back = parse_edge_list(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.role(3).value(), "clause:0");
  EXPECT_FALSE(back.role(1).has_value());
}

TEST(Graph, ParseErrorsCarryLineNumbers) {
  try {
    parse_edge_list("3 2\n0 1\n1 x\n");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 1\n0 2\n"), InputError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_NO_THROW(parse_edge_list("# comment\n2 1\n\n0 1\n"));
}

TEST(Graph, DotMentionsRolesAndMarkedEdges) {
  Graph g = path(3).with_roles({{1, "m"}});
  const std::vector<MarkedEdge> marked{{"e1", {0, 1}}};
  const std::string dot = export_dot(g, marked);
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("e1"), std::string::npos);
  EXPECT_NE(dot.find("\"m\""), std::string::npos);
}

TEST(GraphProperty, DistancesMatchFloydWarshall) {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 14;
    Graph g = oracle::random_graph(n, rng() % 6, rng);
    const auto ref = oracle::floyd(g);
    const auto got = all_pairs_distances(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(got[u][v], ref[u][v]);
    const int k = static_cast<int>(rng() % 4);
    for (Vertex v = 0; v < n; ++v) {
      VertexSet expect;
      for (Vertex w = 0; w < n; ++w)
        if (ref[v][w] <= k) expect.push_back(w);
      ASSERT_EQ(ball(g, v, k), expect);
    }
  }
}

TEST(GraphProperty, TreeStatistics) {
  std::mt19937 rng(12);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + rng() % 20;
    Graph t = oracle::random_tree(n, rng);
    ASSERT_TRUE(is_tree(t));
    const auto dist = oracle::floyd(t);
    int diam = 0, rad = oracle::kInf;
    for (Vertex v = 0; v < n; ++v) {
      int ecc = *std::max_element(dist[v].begin(), dist[v].end());
      diam = std::max(diam, ecc);
      rad = std::min(rad, ecc);
    }
    StructuralStats s = structural_stats(t);
    EXPECT_EQ(s.n, n);
    EXPECT_EQ(s.leaves, oracle::count_leaves(t));
    EXPECT_EQ(s.supports, oracle::count_supports(t));
    EXPECT_EQ(s.diameter, diam);
    EXPECT_EQ(s.radius, rad);
    auto dp = diametrical_path(t);
    EXPECT_EQ(static_cast<int>(dp.size()) - 1, diam);
    EXPECT_EQ(dist[dp.front()][dp.back()], diam);
    const Vertex c = center_vertex(t);
    EXPECT_EQ(*std::max_element(dist[c].begin(), dist[c].end()), rad);
  }
}

TEST(GraphProperty, SplitAtEdgePartitionsTheTree) {
  std::mt19937 rng(13);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng() % 15;
    Graph t = oracle::random_tree(n, rng);
    auto e = t.edges()[rng() % t.size()];
    EdgeSplit s = split_at_edge(t, e.first, e.second);
    EXPECT_EQ(s.component_u.graph.order() + s.component_v.graph.order(), n);
    EXPECT_TRUE(is_tree(s.component_u.graph));
    EXPECT_TRUE(is_tree(s.component_v.graph));
    auto pu = s.component_u.parent_vertices();
    EXPECT_NE(std::find(pu.begin(), pu.end(), e.first), pu.end());
  }
}

TEST(Graph, DisconnectedAndBipartite) {
  const std::vector<Edge> e{{0, 1}, {2, 3}};
  Graph g = Graph::from_edges(4, e);
  EXPECT_FALSE(is_connected(g));
  EXPECT_FALSE(is_tree(g));
  EXPECT_EQ(bfs_distances(g, 0)[2], kUnreachable);
  EXPECT_FALSE(structural_stats(g).radius.has_value());
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_FALSE(bipartition(Graph::from_edges(3, tri)).has_value());
  EXPECT_TRUE(bipartition(path(5)).has_value());
}
