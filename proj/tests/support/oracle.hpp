#pragma once

// Test-only reference implementations. Nothing here calls into the library
// except Graph for input, so a bug in the solvers cannot hide behind them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "packdom/graph.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd(const packdom::Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (auto [u, v] : g.edges()) dist[u][v] = dist[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  return dist;
}

inline bool valid(const std::vector<std::vector<int>>& dist, const std::vector<int>& set, int d,
                  int p) {
  const int n = static_cast<int>(dist.size());
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (dist[set[a]][set[b]] <= p) return false;
  for (int v = 0; v < n; ++v) {
    bool hit = false;
    for (int s : set) hit = hit || dist[v][s] <= d;
    if (!hit) return false;
  }
  return true;
}

/// gamma_d^p by enumerating every subset in order of size (n <= 20);
/// nullopt when no set qualifies.
inline std::optional<int> gamma(const packdom::Graph& g, int d, int p) {
  const auto dist = floyd(g);
  const int n = static_cast<int>(g.order());
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best && size >= *best) continue;
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) set.push_back(v);
    if (valid(dist, set, d, p)) best = size;
  }
  return best;
}

inline std::size_t count_leaves(const packdom::Graph& g) {
  std::size_t c = 0;
  for (packdom::Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == 1;
  return c;
}

inline std::size_t count_supports(const packdom::Graph& g) {
  std::size_t c = 0;
  for (packdom::Vertex v = 0; v < g.order(); ++v) {
    bool support = false;
    for (auto w : g.neighbors(v)) support = support || g.degree(w) == 1;
    c += support;
  }
  return c;
}

/// Random recursive tree: vertex i attaches to a uniform earlier vertex.
inline packdom::Graph random_tree(std::size_t n, std::mt19937& rng) {
  std::vector<packdom::Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.push_back({static_cast<packdom::Vertex>(pick(rng)), static_cast<packdom::Vertex>(i)});
  }
  return packdom::Graph::from_edges(n, edges);
}

/// Connected graph: a random tree plus up to `extra` random chords.
inline packdom::Graph random_graph(std::size_t n, std::size_t extra, std::mt19937& rng) {
  std::vector<packdom::Edge> edges = random_tree(n, rng).edges();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < 4 * extra && extra > 0; ++t) {
    auto u = static_cast<packdom::Vertex>(pick(rng));
    auto v = static_cast<packdom::Vertex>(pick(rng));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (std::find(edges.begin(), edges.end(), packdom::Edge{u, v}) != edges.end()) continue;
    edges.push_back({u, v});
    if (--extra == 0) break;
  }
  return packdom::Graph::from_edges(n, edges);
}

}  // namespace oracle
