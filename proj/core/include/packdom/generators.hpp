#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "packdom/graph.hpp"

namespace packdom {

/// A generated graph together with its named special edges.
struct Family {
  Graph graph;
  std::vector<MarkedEdge> marked;

  Edge edge(const std::string& name) const;
};

Graph make_path(std::size_t n);
/// K_{1,m}: centre 0, leaves 1..m.
Graph make_star(std::size_t leaves);
/// C_n, n >= 3.
Graph make_cycle(std::size_t n);

/// Centre 0 with one path of the given length per leg (legs >= 1,
/// every length >= 1). Leg vertices are numbered leg by leg, outward.
Graph make_spider(std::span<const std::size_t> leg_lengths);
Graph make_spider(std::size_t legs, std::size_t leg_length);

/// Spider whose leg i has length d + m_i (2d+1); its leaves are pairwise at
/// distance 2d (mod 2d+1), so it lies in T_d.
Graph make_Td_spider(int d, std::span<const std::size_t> multiples);

/// Star K_{1,ds} with s pendant copies of P_d on each of its ds+1 vertices;
/// n = (ds+1)^2. Centre 0, star leaves 1..ds, then the paths.
Graph make_fig3_tree(int d, int s);

/// G_p: u_1 = 0 with p pendant 2-paths, u_1 - m - v_1, p leaves on v_1, and
/// e_1 = u_1 v_1.
Family make_gp(int p);
/// G_p': u_2 = 0 and v_2 each with p pendant 2-paths, u_2 - a - b - v_2, and
/// e_2 = u_2 v_2.
Family make_gp_prime(int p);
/// H_p: 6-cycle v_1 w_1 v_2 w_3 v_3 w_2 with p pendant 2-paths on each v_i;
/// e = w_1 v_2.
Family make_hp(int p);

/// Uniform labelled tree via a random Prüfer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Random tree on n vertices plus `extra` distinct random non-tree edges
/// (fewer if the graph becomes complete).
Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed);

/// Decodes a Prüfer sequence over 0..n-1 (length n-2) into a tree on n vertices.
Graph tree_from_pruefer(std::span<const Vertex> code, std::size_t n);

/// Every labelled tree on n vertices (n^(n-2) of them), once each.
inline constexpr std::size_t kEnumerateMaxOrder = 8;
void enumerate_trees(std::size_t n, const std::function<void(const Graph&)>& visit);

}  // namespace packdom
