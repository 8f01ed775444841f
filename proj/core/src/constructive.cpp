#include "packdom/constructive.hpp"

#include <algorithm>
#include <numeric>

#include "packdom/bounds.hpp"
#include "packdom/errors.hpp"
#include "packdom/exact.hpp"
#include "packdom/tree_dp.hpp"

namespace packdom {

namespace {

void require_tree(const Graph& g, const char* who) {
  if (!is_tree(g)) throw InputError(std::string(who) + " requires a tree");
}

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

// Vertices whose path to `away` passes through `root`, i.e. the component of
// root in g - {root, away} edge.
VertexSet subtree_away_from(const Graph& g, Vertex root, Vertex away) {
  VertexSet out{root};
  std::vector<char> seen(g.order(), 0);
  seen[root] = 1;
  seen[away] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : g.neighbors(out[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  return out;
}

VertexSet to_parent(const Subgraph& sub, std::span<const Vertex> local) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.to_parent[v]);
  return sorted(std::move(out));
}

VertexSet alive_list(const std::vector<char>& alive) {
  VertexSet out;
  for (Vertex v = 0; v < alive.size(); ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

// Maps parent vertices into the induced subgraph on `members`; returns false
// if some vertex is missing.
bool to_local(std::span<const Vertex> members, std::span<const Vertex> parent_set,
              std::size_t n, VertexSet& out) {
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  out.clear();
  for (Vertex v : parent_set) {
    if (local[v] < 0) return false;
    out.push_back(static_cast<Vertex>(local[v]));
  }
  std::sort(out.begin(), out.end());
  return true;
}

struct PeelFrame {
  std::size_t step;
  Vertex candidate;
  VertexSet members;  // vertices of the tree before this peel
};

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

// ---- diametrical-path peeling ----------------------------------------------

ConstructionTrace peel_gamma22_upper(const Graph& tree) {
  require_tree(tree, "peel_gamma22_upper");
  const std::size_t n = tree.order();
  if (n < 2) throw InputError("peel_gamma22_upper needs n >= 2");

  ConstructionTrace trace;
  const auto stats = structural_stats(tree);
  const auto s = static_cast<std::int64_t>(stats.supports);
  trace.size_bound = floor_of(Rational(static_cast<std::int64_t>(n) + 3 * s - 1, 5));
  trace.size_bound_text = "floor((n+3s-1)/5) = " + std::to_string(trace.size_bound);

  std::vector<char> alive(n, 1);
  std::vector<PeelFrame> frames;
  VertexSet current;  // parent ids, a maximal 2-packing of the remaining tree
  VertexSet base_members;

  while (true) {
    VertexSet members = alive_list(alive);
    Subgraph sub = induced_subgraph(tree, members);
    const Graph& t = sub.graph;
    auto path = diametrical_path(t);
    const std::size_t diam = path.size() - 1;
    if (diam <= 4) {
      current = {sub.to_parent[center_vertex(t)]};
      trace.steps.push_back({"base", members, current});
      base_members = std::move(members);
      break;
    }
    auto deg = [&](std::size_t i) { return t.degree(path[i]); };
    std::string label;
    std::size_t cut = 0;      // remove T(v_cut)
    std::size_t keep_at = 0;  // candidate v_keep_at
    if (deg(2) >= 3) {
      label = "case1", cut = 1, keep_at = 0;
    } else if (deg(3) >= 3) {
      label = "case2", cut = 2, keep_at = 0;
    } else if (deg(4) >= 3) {
      label = "case3", cut = 3, keep_at = 1;
    } else if (deg(5) == 1) {
      // v5 is the far end: v1 plus its leaves, then a bare path to v5.
      VertexSet local{path[1], path[5]};
      current = to_parent(sub, local);
      trace.steps.push_back({"case4-path", members, current});
      base_members = std::move(members);
      break;
    } else {
      label = "case4", cut = 4, keep_at = 2;
    }
    VertexSet removed = to_parent(sub, subtree_away_from(t, path[cut], path[cut + 1]));
    frames.push_back({trace.steps.size(), sub.to_parent[path[keep_at]], std::move(members)});
    trace.steps.push_back({label, removed, {}});
    for (Vertex v : removed) alive[v] = 0;
  }

  VertexSet local;
  {
    Subgraph sub = induced_subgraph(tree, base_members);
    if (!to_local(base_members, current, n, local) || !is_maximal_2_packing(sub.graph, local)) {
      throw InternalError("peel_gamma22_upper: base set is not a maximal 2-packing");
    }
  }
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    Subgraph sub = induced_subgraph(tree, it->members);
    if (!to_local(it->members, current, n, local)) {
      throw InternalError("peel_gamma22_upper: set escaped its subtree");
    }
    if (is_maximal_2_packing(sub.graph, local)) continue;
    VertexSet extended = sorted([&] {
      VertexSet e = current;
      e.push_back(it->candidate);
      return e;
    }());
    if (!to_local(it->members, extended, n, local) || !is_maximal_2_packing(sub.graph, local)) {
      throw InternalError("peel_gamma22_upper: " + trace.steps[it->step].label +
                          " repair did not give a maximal 2-packing");
    }
    current = std::move(extended);
    trace.steps[it->step].added = {it->candidate};
  }

  trace.final_set = current;
  if (!is_maximal_2_packing(tree, current) ||
      static_cast<std::int64_t>(current.size()) > trace.size_bound) {
    throw InternalError("peel_gamma22_upper: result violates its postcondition");
  }
  return trace;
}

// ---- private-vertex dominating sets ------------------------------------------

namespace {

struct Coverage {
  std::vector<std::vector<int>> dist;  // dist[i] = distances from dset[i]
  std::vector<int> count;              // members within d
  std::vector<int> owner;              // some member within d
};

Coverage coverage(const Graph& g, std::span<const Vertex> dset, int d) {
  Coverage c;
  c.count.assign(g.order(), 0);
  c.owner.assign(g.order(), -1);
  for (std::size_t i = 0; i < dset.size(); ++i) {
    c.dist.push_back(bfs_distances(g, dset[i]));
    for (Vertex w = 0; w < g.order(); ++w) {
      const int dw = c.dist.back()[w];
      if (dw != kUnreachable && dw <= d) {
        ++c.count[w];
        c.owner[w] = static_cast<int>(i);
      }
    }
  }
  return c;
}

bool has_private(const Coverage& c, std::size_t i, int d) {
  for (std::size_t w = 0; w < c.count.size(); ++w) {
    if (c.dist[i][w] == d && c.count[w] == 1) return true;
  }
  return false;
}

std::optional<VertexSet> exhaustive_private_dset(const Graph& g, std::size_t size, int d) {
  const std::size_t n = g.order();
  std::vector<Vertex> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (is_d_dominating(g, pick, d) && has_private_vertices(g, pick, d)) return pick;
    std::size_t k = size;
    while (k > 0 && pick[k - 1] == n - size + k - 1) --k;
    if (k == 0) return std::nullopt;
    ++pick[k - 1];
    for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

bool has_private_vertices(const Graph& g, std::span<const Vertex> dset, int d) {
  Coverage c = coverage(g, dset, d);
  for (std::size_t i = 0; i < dset.size(); ++i) {
    if (!has_private(c, i, d)) return false;
  }
  return true;
}

namespace {

// Deepest-first greedy rooted at `root`: the deepest undominated vertex x
// gets its d-th ancestor (or the root). That ancestor is the only member
// within d of x, since earlier members missed x and later ones sit no deeper
// than it on other branches.
VertexSet greedy_from_root(const Graph& tree, Vertex root, int d) {
  const std::size_t n = tree.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, root);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : tree.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<int> gap(n, d + 1);  // distance to the set, capped at d+1
  VertexSet out;
  std::vector<Vertex> frontier, next;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (gap[*it] <= d) continue;
    Vertex v = *it;
    for (int t = 0; t < d && v != root; ++t) v = parent[v];
    out.push_back(v);
    gap[v] = 0;
    frontier.assign(1, v);
    for (int r = 1; r <= d && !frontier.empty(); ++r) {
      next.clear();
      for (Vertex u : frontier) {
        for (Vertex w : tree.neighbors(u)) {
          if (gap[w] > r) {
            gap[w] = r;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
  }
  return sorted(std::move(out));
}

}  // namespace

VertexSet private_dset(const Graph& tree, int d) {
  require_tree(tree, "private_dset");
  if (d < 1) throw InputError("private_dset needs d >= 1");
  const auto stats = structural_stats(tree);
  if (*stats.radius < d) throw InputError("private_dset needs radius >= d");
  const std::size_t gamma = static_cast<std::size_t>(min_distance_dominating_tree(tree, d).gamma);

  // Leaves first: a leaf root is never picked for a shallow vertex unless
  // the remaining undominated part hangs right below it.
  std::vector<Vertex> roots = leaves(tree);
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) > 1) roots.push_back(v);
  }
  for (Vertex root : roots) {
    VertexSet dset = greedy_from_root(tree, root, d);
    if (dset.size() == gamma && has_private_vertices(tree, dset, d)) return dset;
  }

  if (tree.order() <= kBruteForceMaxOrder) {
    if (auto found = exhaustive_private_dset(tree, gamma, d)) return *found;
  }
  throw InternalError("private_dset: no rooting of the greedy gave private vertices");
}

// ---- partition ----------------------------------------------------------------

VertexSet private_paths(const Graph& tree, std::span<const Vertex> dset, std::size_t i, int d) {
  Coverage c = coverage(tree, dset, d);
  std::vector<char> in(tree.order(), 0);
  for (Vertex w = 0; w < tree.order(); ++w) {
    if (c.dist[i][w] == d && c.count[w] == 1) {
      for (Vertex x : tree_path(tree, dset[i], w)) in[x] = 1;
    }
  }
  return alive_list(in);
}

Partition build_partition(const Graph& tree, std::span<const Vertex> dset, int d) {
  require_tree(tree, "build_partition");
  const std::size_t n = tree.order();
  const std::size_t b = dset.size();
  if (b == 0) throw InputError("build_partition needs a non-empty set");
  auto layer = bfs_distances(tree, dset);
  for (Vertex v = 0; v < n; ++v) {
    if (layer[v] > d) throw InputError("build_partition: set is not d-distance dominating");
  }

  std::vector<std::size_t> cell(n, b);
  for (std::size_t i = 0; i < b; ++i) cell[dset[i]] = i;
  std::vector<Vertex> by_layer(n);
  std::iota(by_layer.begin(), by_layer.end(), 0);
  std::stable_sort(by_layer.begin(), by_layer.end(),
                   [&](Vertex a, Vertex c) { return layer[a] < layer[c]; });
  for (Vertex v : by_layer) {
    if (layer[v] == 0) continue;
    for (Vertex w : tree.neighbors(v)) {
      if (layer[w] == layer[v] - 1) cell[v] = std::min(cell[v], cell[w]);
    }
  }

  Partition part;
  part.anchors.assign(dset.begin(), dset.end());
  part.cells.resize(b);
  for (Vertex v = 0; v < n; ++v) part.cells[cell[v]].push_back(v);

  std::map<Edge, int> crossings;
  for (auto [u, v] : tree.edges()) {
    if (cell[u] != cell[v]) {
      ++crossings[{static_cast<Vertex>(std::min(cell[u], cell[v])),
                   static_cast<Vertex>(std::max(cell[u], cell[v]))}];
    }
  }
  std::vector<Edge> quotient_edges;
  for (auto [e, count] : crossings) {
    if (count != 1) throw InternalError("build_partition: two cells joined by several edges");
    quotient_edges.push_back(e);
  }
  part.quotient = Graph::from_edges(b, quotient_edges);
  if (!is_tree(part.quotient)) throw InternalError("build_partition: quotient is not a tree");

  for (std::size_t i = 0; i < b; ++i) {
    Subgraph sub = induced_subgraph(tree, part.cells[i]);
    auto it = std::lower_bound(part.cells[i].begin(), part.cells[i].end(), dset[i]);
    auto dist = bfs_distances(sub.graph, static_cast<Vertex>(it - part.cells[i].begin()));
    for (int x : dist) {
      if (x == kUnreachable || x > d) {
        throw InternalError("build_partition: cell is disconnected or too wide");
      }
    }
    for (Vertex x : private_paths(tree, dset, i, d)) {
      if (cell[x] != i) throw InternalError("build_partition: private path leaves its cell");
    }
  }

  std::size_t first = 0;
  for (std::size_t i = 1; i < b; ++i) {
    if (part.cells[i].size() > part.cells[first].size()) first = i;
  }
  part.order.push_back(first);
  std::vector<char> seen(b, 0);
  seen[first] = 1;
  for (std::size_t head = 0; head < part.order.size(); ++head) {
    for (Vertex y : part.quotient.neighbors(static_cast<Vertex>(part.order[head]))) {
      if (!seen[y]) {
        seen[y] = 1;
        part.order.push_back(y);
      }
    }
  }
  return part;
}

// ---- cell-by-cell construction -------------------------------------------------

namespace {

// One cell rooted at its anchor.
struct CellShape {
  std::vector<int> depth;   // -1 outside the cell
  std::vector<int> reach;   // deepest level inside the vertex's subtree
  std::vector<Vertex> branch;  // child of the anchor heading the branch
};

CellShape shape_cell(const Graph& tree, std::span<const Vertex> cell_of_ids, Vertex anchor,
                     const std::vector<std::size_t>& cell, std::size_t id) {
  const std::size_t n = tree.order();
  CellShape sh;
  sh.depth.assign(n, -1);
  sh.reach.assign(n, -1);
  sh.branch.assign(n, anchor);
  std::vector<Vertex> order{anchor};
  std::vector<Vertex> parent(n, anchor);
  sh.depth[anchor] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex w : tree.neighbors(v)) {
      if (cell[w] != id || sh.depth[w] >= 0) continue;
      sh.depth[w] = sh.depth[v] + 1;
      parent[w] = v;
      sh.branch[w] = v == anchor ? w : sh.branch[v];
      order.push_back(w);
    }
  }
  if (order.size() != cell_of_ids.size()) throw InternalError("construct_gammad2: broken cell");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    sh.reach[v] = std::max(sh.reach[v], sh.depth[v]);
    if (v != anchor) sh.reach[parent[v]] = std::max(sh.reach[parent[v]], sh.reach[v]);
  }
  return sh;
}

}  // namespace

ConstructionTrace construct_gammad2(const Graph& tree, int d) {
  require_tree(tree, "construct_gammad2");
  if (d < 2) throw InputError("construct_gammad2 needs d >= 2");
  const std::size_t n = tree.order();
  const SurdBound bound = ub_thm5(static_cast<std::int64_t>(n), d);

  ConstructionTrace trace;
  trace.size_bound = bound.floor();
  trace.size_bound_text = bound.to_string();

  const auto stats = structural_stats(tree);
  if (*stats.radius <= d) {
    trace.final_set = {center_vertex(tree)};
    trace.steps.push_back({"radius<=d", alive_list(std::vector<char>(n, 1)), trace.final_set});
  } else {
    VertexSet dset = private_dset(tree, d);
    Partition part = build_partition(tree, dset, d);
    const std::size_t b = dset.size();
    std::vector<std::size_t> cell(n);
    for (std::size_t i = 0; i < b; ++i) {
      for (Vertex v : part.cells[i]) cell[v] = i;
    }

    VertexSet chosen;
    std::vector<char> done(b, 0);
    const std::size_t first = part.order.front();
    chosen.push_back(dset[first]);
    done[first] = 1;
    trace.steps.push_back({"cell 1: anchor", part.cells[first], {dset[first]}});

    for (std::size_t k = 1; k < b; ++k) {
      const std::size_t i = part.order[k];
      const Vertex anchor = dset[i];
      const auto& members = part.cells[i];

      // The unique edge v'v from this cell into an earlier one.
      std::optional<Edge> link;
      for (Vertex x : members) {
        for (Vertex y : tree.neighbors(x)) {
          if (cell[y] == i || !done[cell[y]]) continue;
          if (link) throw InternalError("construct_gammad2: cell has two links to earlier cells");
          link = Edge{x, y};
        }
      }
      if (!link) throw InternalError("construct_gammad2: cell has no link to earlier cells");
      const Vertex vp = link->first;

      CellShape sh = shape_cell(tree, members, anchor, cell, i);
      const int j = sh.depth[vp];
      const auto dist_s = bfs_distances(tree, chosen);

      VertexSet u_prime;  // children of the anchor whose branch reaches level d
      for (Vertex c : tree.neighbors(anchor)) {
        if (cell[c] == i && sh.reach[c] == d) u_prime.push_back(c);
      }
      if (u_prime.empty()) throw InternalError("construct_gammad2: cell has no level-d vertex");
      const bool vp_in_u = j == 1 && std::binary_search(u_prime.begin(), u_prime.end(), vp);
      if (vp_in_u) {
        std::erase(u_prime, vp);
        u_prime.insert(u_prime.begin(), vp);
      }
      auto z_of = [&](Vertex u) {
        for (Vertex x : members) {
          if (sh.depth[x] == 2 && sh.branch[x] == u && sh.reach[x] == d) return x;
        }
        throw InternalError("construct_gammad2: branch without a level-2 vertex");
      };
      auto u_then_z = [&](std::size_t head) {
        VertexSet out;
        if (head < u_prime.size()) out.push_back(u_prime[head]);
        for (std::size_t t = head + 1; t < u_prime.size(); ++t) out.push_back(z_of(u_prime[t]));
        return out;
      };

      VertexSet added;
      std::string label = "cell " + std::to_string(k + 1) + ": j=" + std::to_string(std::min(j, 2));
      if (j == 0) {
        const int dv = dist_s[anchor];
        label += ", dist=" + std::to_string(std::min(dv, 3));
        if (dv == 1) {
          for (Vertex u : u_prime) added.push_back(z_of(u));
        } else if (dv == 2) {
          added = u_then_z(0);
        } else {
          added = {anchor};
        }
      } else if (j == 1) {
        const int dv = dist_s[vp];
        label += ", dist=" + std::to_string(std::min(dv, 2));
        if (dv >= 2) {
          added = {anchor};
        } else if (!vp_in_u) {
          added = u_then_z(0);
        } else if (u_prime.size() >= 2) {
          label += ", v' in U'";
          added = u_then_z(1);
        } else {
          // Only the link branch reaches level d. Its chosen neighbour covers
          // it and levels <= d-2 elsewhere; a branch reaching level d-1 needs
          // its own head.
          label += ", v' in U'";
          for (Vertex c : tree.neighbors(anchor)) {
            if (cell[c] == i && c != vp && sh.reach[c] == d - 1) {
              added = {c};
              label += ", extra head";
              break;
            }
          }
        }
      } else {
        added = {anchor};
      }
      std::sort(added.begin(), added.end());
      chosen.insert(chosen.end(), added.begin(), added.end());
      done[i] = 1;
      trace.steps.push_back({label, members, added});
    }
    trace.final_set = sorted(chosen);
  }

  const auto& s = trace.final_set;
  if (!is_d_dominating(tree, s, d) || !is_p_packing(tree, s, 2) ||
      !bound.admits(static_cast<std::int64_t>(s.size()))) {
    throw InternalError("construct_gammad2: result violates its postcondition");
  }
  return trace;
}

// ---- spanning tree -----------------------------------------------------------

SpanningTreeResult spanning_tree_gamma22(const Graph& g, std::chrono::milliseconds timeout) {
  if (g.order() == 0 || !is_connected(g)) throw InputError("spanning_tree_gamma22 needs a connected graph");
  SolveOptions opts;
  opts.timeout = timeout;
  SolveOutcome out = gamma_exact(g, {2, 2}, opts);
  if (out.status == SolveStatus::kTimeout) throw TimeoutError("spanning_tree_gamma22: exact solve timed out");
  if (!out.has_value()) throw InternalError("spanning_tree_gamma22: no maximal 2-packing found");

  const std::size_t n = g.order();
  const VertexSet& s = out.witness;
  std::vector<char> in_s(n, 0);
  for (Vertex v : s) in_s[v] = 1;

  std::vector<Edge> edges;
  Dsu dsu(n);
  auto take = [&](Vertex a, Vertex b) {
    dsu.unite(a, b);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  // S': the unique neighbour in S.
  std::vector<char> first_ring(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (in_s[v]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (in_s[w]) {
        take(v, w);
        first_ring[v] = 1;
        break;
      }
    }
  }
  // S'': smallest s_j at distance 2, then the smallest middle vertex.
  for (Vertex v = 0; v < n; ++v) {
    if (in_s[v] || first_ring[v]) continue;
    std::optional<std::pair<Vertex, Vertex>> best;  // (s_j, middle)
    for (Vertex u : g.neighbors(v)) {
      if (!first_ring[u]) continue;
      for (Vertex w : g.neighbors(u)) {
        if (in_s[w] && (!best || std::make_pair(w, u) < *best)) best = {w, u};
      }
    }
    if (!best) throw InternalError("spanning_tree_gamma22: vertex not 2-dominated");
    take(v, best->second);
  }
  for (auto [u, v] : g.edges()) {
    if (dsu.find(u) != dsu.find(v)) take(u, v);
  }

  SpanningTreeResult result;
  result.tree = Graph::from_edges(n, edges, g.roles());
  result.witness = s;
  result.gamma_graph = out.gamma;
  if (!is_tree(result.tree) || !is_maximal_2_packing(result.tree, s)) {
    throw InternalError("spanning_tree_gamma22: result violates its postcondition");
  }
  return result;
}

// ---- F_2 edge split ------------------------------------------------------------

EdgeSplit split_edge_f2(const Graph& tree) {
  require_tree(tree, "split_edge_f2");
  if (!in_family_F2(tree)) throw InputError("split_edge_f2 needs a tree in F_2");
  const int gamma = min_distance_dominating_tree(tree, 2).gamma;
  if (gamma < 2) throw InputError("split_edge_f2 needs gamma_2^0 >= 2");

  auto path = diametrical_path(tree);
  if (path.size() < 10) throw InternalError("split_edge_f2: diametrical path shorter than 9");
  for (std::size_t i = 3; i <= 6; ++i) {
    if (tree.degree(path[i]) != 2) throw InternalError("split_edge_f2: v3..v6 not all of degree 2");
  }
  EdgeSplit split = split_at_edge(tree, path[4], path[5]);
  const auto stats = structural_stats(tree);
  const Graph& tu = split.component_u.graph;
  const Graph& tv = split.component_v.graph;
  const bool ok =
      in_family_F2(tu) && in_family_F2(tv) &&
      min_distance_dominating_tree(tu, 2).gamma + min_distance_dominating_tree(tv, 2).gamma ==
          gamma &&
      split.stats_u.leaves + split.stats_v.leaves == stats.leaves + 2 &&
      split.stats_u.supports + split.stats_v.supports == stats.supports + 2;
  if (!ok) throw InternalError("split_edge_f2: split violates its postcondition");
  return split;
}

}  // namespace packdom
