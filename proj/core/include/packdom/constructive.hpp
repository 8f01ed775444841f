#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "packdom/graph.hpp"

namespace packdom {

struct ConstructionStep {
  std::string label;   // e.g. "case2", "cell 3: j=1, dist=1"
  VertexSet processed; // subtree removed or cell handled in this step
  VertexSet added;
};

/// Record of a constructive proof run. `final_set` is the union of all
/// `added` sets and satisfies |final_set| <= size_bound.
struct ConstructionTrace {
  std::vector<ConstructionStep> steps;
  VertexSet final_set;
  std::int64_t size_bound = 0;  // largest admissible integer size
  std::string size_bound_text;  // exact form of the bound
};

/// Maximal 2-packing of a tree (n >= 2) of size at most floor((n+3s-1)/5),
/// built by repeatedly peeling the far end of a diametrical path.
ConstructionTrace peel_gamma22_upper(const Graph& tree);

/// Minimum d-distance dominating set of a tree with rad >= d >= 1 in which
/// every member v has a vertex w at distance exactly d with N_d[w] ∩ D = {v}.
VertexSet private_dset(const Graph& tree, int d);

/// True iff every member of `dset` has such a private vertex.
bool has_private_vertices(const Graph& g, std::span<const Vertex> dset, int d);

struct Partition {
  std::vector<VertexSet> cells;  // cells[i] is anchored at anchors[i]
  VertexSet anchors;
  Graph quotient;                // vertex i stands for cells[i]
  /// Relabelling y_1..y_b: order[0] is the largest cell and every prefix
  /// induces a subtree of the quotient.
  std::vector<std::size_t> order;
};

/// Partition of V(T) around a private_dset output: multi-source BFS where
/// each vertex joins the cell of the smallest-index anchor among its
/// neighbours one layer closer. All invariants are checked; a violation
/// throws InternalError.
Partition build_partition(const Graph& tree, std::span<const Vertex> dset, int d);

/// The vertices on v_i,w paths of order d+1 for private vertices w of v_i.
VertexSet private_paths(const Graph& tree, std::span<const Vertex> dset, std::size_t i, int d);

/// d-distance dominating 2-packing of a tree (d >= 2) of size at most
/// (n - 2 sqrt(n) + d + 1)/d, assembled cell by cell over build_partition.
ConstructionTrace construct_gammad2(const Graph& tree, int d);

struct SpanningTreeResult {
  Graph tree;
  VertexSet witness;  // a minimum d=2,p=2 set of the input graph
  int gamma_graph = 0;
};

/// Spanning tree T of a connected graph G with gamma_2^2(T) <= gamma_2^2(G):
/// the witness S of G stays a maximal 2-packing of T. Throws TimeoutError
/// when the exact solve on G does not finish.
SpanningTreeResult spanning_tree_gamma22(
    const Graph& g, std::chrono::milliseconds timeout = std::chrono::milliseconds(60000));

/// For T in F_2 with gamma_2^0 >= 2, the split at edge v4v5 of the canonical
/// diametrical path v0..vm. Both parts are in F_2 and gamma_2^0, leaves and
/// support counts add up as expected; each is checked before returning.
EdgeSplit split_edge_f2(const Graph& tree);

}  // namespace packdom
