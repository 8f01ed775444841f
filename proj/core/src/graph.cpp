#include "packdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "packdom/errors.hpp"

namespace packdom {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, RoleMap roles) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint >= n = " + std::to_string(n));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      throw InputError("duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                       std::to_string(std::max(v, *dup)) + ")");
    }
  }
  for (const auto& [v, tag] : roles) {
    if (v >= n) throw InputError("role tag on vertex " + std::to_string(v) + " >= n");
  }
  g.edge_count_ = edges.size();
  g.roles_ = std::move(roles);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::string_view> Graph::role(Vertex v) const {
  auto it = roles_.find(v);
  if (it == roles_.end()) return std::nullopt;
  return std::string_view(it->second);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) {
    throw InputError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  auto list = edges();
  std::erase(list, Edge{std::min(u, v), std::max(u, v)});
  return from_edges(order(), list, roles_);
}

Graph Graph::with_roles(RoleMap roles) const {
  return from_edges(order(), edges(), std::move(roles));
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (n = " +
                     std::to_string(g.order()) + ")");
  }
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  const Vertex sources[] = {source};
  return bfs_distances(g, sources);
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  for (Vertex s : sources) {
    check_vertex(g, s);
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(bfs_distances(g, v));
  return rows;
}

VertexSet ball(const Graph& g, Vertex v, int k) {
  if (k < 0) throw InputError("ball radius must be >= 0");
  auto dist = bfs_distances(g, v);
  VertexSet out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] != kUnreachable && dist[u] <= k) out.push_back(u);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, Vertex{0});
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

VertexSet support_vertices(const Graph& g) {
  std::vector<bool> support(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) support[g.neighbors(v)[0]] = true;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (support[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> eccentricities(const Graph& g) {
  std::vector<int> ecc(g.order(), kUnreachable);
  if (!is_connected(g)) return ecc;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = bfs_distances(g, v);
    ecc[v] = *std::max_element(dist.begin(), dist.end());
  }
  return ecc;
}

StructuralStats structural_stats(const Graph& g) {
  StructuralStats stats;
  stats.n = g.order();
  stats.leaves = leaves(g).size();
  stats.supports = support_vertices(g).size();
  if (g.order() > 0 && is_connected(g)) {
    auto ecc = eccentricities(g);
    stats.radius = *std::min_element(ecc.begin(), ecc.end());
    stats.diameter = *std::max_element(ecc.begin(), ecc.end());
  }
  return stats;
}

VertexSet Subgraph::parent_vertices() const {
  VertexSet out(to_parent.begin(), to_parent.end());
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.order(), kAbsent);
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g, vertices[i]);
    if (local[vertices[i]] != kAbsent) throw InputError("repeated vertex in induced_subgraph");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  RoleMap roles;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex u = vertices[i];
    for (Vertex w : g.neighbors(u)) {
      if (local[w] != kAbsent && local[w] > i) edges.emplace_back(static_cast<Vertex>(i), local[w]);
    }
    if (auto tag = g.role(u)) roles.emplace(static_cast<Vertex>(i), std::string(*tag));
  }
  sub.graph = Graph::from_edges(vertices.size(), edges, std::move(roles));
  return sub;
}

EdgeSplit split_at_edge(const Graph& tree, Vertex u, Vertex v) {
  if (!is_tree(tree)) throw InputError("split_at_edge requires a tree");
  check_vertex(tree, u);
  check_vertex(tree, v);
  if (!tree.has_edge(u, v)) {
    throw InputError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  auto forest = tree.without_edge(u, v);
  auto dist_u = bfs_distances(forest, u);
  VertexSet side_u, side_v;
  for (Vertex w = 0; w < tree.order(); ++w) {
    (dist_u[w] != kUnreachable ? side_u : side_v).push_back(w);
  }
  EdgeSplit split;
  split.u = u;
  split.v = v;
  split.component_u = induced_subgraph(tree, side_u);
  split.component_v = induced_subgraph(tree, side_v);
  split.stats_u = structural_stats(split.component_u.graph);
  split.stats_v = structural_stats(split.component_v.graph);
  return split;
}

std::vector<Vertex> tree_path(const Graph& tree, Vertex a, Vertex b) {
  check_vertex(tree, a);
  check_vertex(tree, b);
  // BFS from b so that parent pointers walk a -> b.
  std::vector<Vertex> parent(tree.order(), static_cast<Vertex>(-1));
  std::vector<bool> seen(tree.order(), false);
  std::deque<Vertex> queue{b};
  seen[b] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : tree.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (!seen[a]) throw InputError("tree_path: vertices are disconnected");
  std::vector<Vertex> path{a};
  while (path.back() != b) path.push_back(parent[path.back()]);
  return path;
}

namespace {

Vertex smallest_farthest(const std::vector<int>& dist) {
  auto it = std::max_element(dist.begin(), dist.end());  // first maximum
  return static_cast<Vertex>(it - dist.begin());
}

}  // namespace

std::vector<Vertex> diametrical_path(const Graph& tree) {
  if (!is_tree(tree)) throw InputError("diametrical_path requires a tree");
  Vertex a = smallest_farthest(bfs_distances(tree, Vertex{0}));
  Vertex b = smallest_farthest(bfs_distances(tree, a));
  return tree_path(tree, a, b);
}

Vertex center_vertex(const Graph& g) {
  if (g.order() == 0) throw InputError("center_vertex of an empty graph");
  auto ecc = eccentricities(g);
  if (ecc[0] == kUnreachable) throw InputError("center_vertex requires a connected graph");
  return static_cast<Vertex>(std::min_element(ecc.begin(), ecc.end()) - ecc.begin());
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace packdom
