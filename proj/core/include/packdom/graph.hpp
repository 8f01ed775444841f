#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace packdom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted ascending, duplicate-free.
using VertexSet = std::vector<Vertex>;

using RoleMap = std::map<Vertex, std::string>;

inline constexpr int kUnreachable = -1;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted so that every traversal in the toolkit is
/// deterministic. Role tags ("literal:+:3", "clause:1", ...) are carried in a
/// side map and never consulted by the algorithms themselves. Instances are
/// immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Validates the edge list: endpoints in range, no self-loops, no
  /// duplicates (in either orientation). Throws InputError otherwise.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, RoleMap roles = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const RoleMap& roles() const noexcept { return roles_; }
  std::optional<std::string_view> role(Vertex v) const;

  Graph without_edge(Vertex u, Vertex v) const;
  Graph with_roles(RoleMap roles) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.roles_ == b.roles_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  RoleMap roles_;
  std::size_t edge_count_ = 0;
};

void check_vertex(const Graph& g, Vertex v);

/// Shortest-path distances from `source`; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Multi-source BFS: distance to the nearest member of `sources`.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);

/// Row v holds bfs_distances(g, v).
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Closed distance-k ball N_k[v].
VertexSet ball(const Graph& g, Vertex v, int k);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

VertexSet leaves(const Graph& g);
VertexSet support_vertices(const Graph& g);

/// kUnreachable for every vertex of a disconnected graph.
std::vector<int> eccentricities(const Graph& g);

struct StructuralStats {
  std::size_t n = 0;
  std::size_t leaves = 0;
  std::size_t supports = 0;
  std::optional<int> radius;  // empty when disconnected
  std::optional<int> diameter;

  friend bool operator==(const StructuralStats&, const StructuralStats&) = default;
};

StructuralStats structural_stats(const Graph& g);

/// The subgraph induced by `vertices` (relabelled 0..k-1 in the given order)
/// plus the map back to the parent's identifiers. Roles are carried over.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet parent_vertices() const;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// The two components of T - uv.
struct EdgeSplit {
  Vertex u = 0;
  Vertex v = 0;
  Subgraph component_u;
  Subgraph component_v;
  StructuralStats stats_u;
  StructuralStats stats_v;
};

EdgeSplit split_at_edge(const Graph& tree, Vertex u, Vertex v);

/// Unique path between a and b in a tree, both endpoints included.
std::vector<Vertex> tree_path(const Graph& tree, Vertex a, Vertex b);

/// Canonical diametrical path: BFS from 0 to the smallest farthest vertex a,
/// then BFS from a to the smallest farthest vertex b; returns the a..b path.
std::vector<Vertex> diametrical_path(const Graph& tree);

/// Smallest-identifier vertex of minimum eccentricity.
Vertex center_vertex(const Graph& g);

/// Two-colouring of a bipartite graph, empty if the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

// ---- text formats ---------------------------------------------------------

/// Edge-list format: header "n m", then m lines "u v". Role tags follow the
/// edges as lines "# role <v> <tag>"; any other '#' line is a comment.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

struct MarkedEdge {
  std::string name;
  Edge edge;
};

/// Undirected DOT. Role tags become node labels, marked edges carry a
/// `label` and `style=bold` attribute.
std::string export_dot(const Graph& g, std::span<const MarkedEdge> marked = {});

}  // namespace packdom
