#include "packdom/tree_dp.hpp"

#include <algorithm>
#include <limits>

#include "packdom/errors.hpp"

namespace packdom {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr int kFromSelected = -1;

// State layout: index = a * depth_slots + b, where a in [0, cap] is the
// distance to the nearest chosen vertex below (cap = "cap or more / none")
// and b = 0 means everything below is dominated, b = t + 1 means the deepest
// undominated vertex sits at depth t.
struct Layout {
  int d;
  int p;
  int cap;
  int depth_slots;
  int states;

  Layout(Params params)
      : d(params.d),
        p(params.p),
        cap(std::max(params.d + 1, params.p)),
        depth_slots(params.d + 1),
        states((cap + 1) * depth_slots) {}

  int index(int a, int b) const { return a * depth_slots + b; }
  int a_of(int s) const { return s / depth_slots; }
  int b_of(int s) const { return s % depth_slots; }
};

struct Back {
  int acc;
  int child;
};

struct RootedTree {
  std::vector<Vertex> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> bfs_order;
};

RootedTree root_at_zero(const Graph& tree) {
  RootedTree rt;
  const std::size_t n = tree.order();
  rt.parent.assign(n, static_cast<Vertex>(-1));
  rt.children.resize(n);
  rt.bfs_order.reserve(n);
  std::vector<bool> seen(n, false);
  rt.bfs_order.push_back(0);
  seen[0] = true;
  for (std::size_t head = 0; head < rt.bfs_order.size(); ++head) {
    Vertex v = rt.bfs_order[head];
    for (Vertex w : tree.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        rt.parent[w] = v;
        rt.children[v].push_back(w);
        rt.bfs_order.push_back(w);
      }
    }
  }
  return rt;
}

Vertex tree_center(const Graph& tree, int& radius) {
  auto path = diametrical_path(tree);
  const std::size_t diam = path.size() - 1;
  radius = static_cast<int>((diam + 1) / 2);
  Vertex c = path[diam / 2];
  if (diam % 2 == 1) c = std::min(c, path[diam / 2 + 1]);
  return c;
}

class TreeDp {
 public:
  TreeDp(const Graph& tree, Params params)
      : tree_(tree), layout_(params), rooted_(root_at_zero(tree)) {}

  SolveOutcome solve() {
    const std::size_t n = tree_.order();
    const int S = layout_.states;
    final_cost_.assign(n * S, kInf);
    final_origin_.assign(n * S, kInf);
    selected_choice_.resize(n);
    steps_.resize(n);

    for (auto it = rooted_.bfs_order.rbegin(); it != rooted_.bfs_order.rend(); ++it) {
      process(*it);
    }

    int best = -1;
    for (int s = 0; s < S; ++s) {
      if (layout_.b_of(s) != 0 || final_cost_[s] >= kInf) continue;
      if (best < 0 || final_cost_[s] < final_cost_[best]) best = s;
    }
    if (best < 0) return SolveOutcome::infeasible();
    return SolveOutcome::optimal(reconstruct(best));
  }

 private:
  const int* final_row(Vertex v) const { return final_cost_.data() + v * layout_.states; }

  void process(Vertex v) {
    const Layout& L = layout_;
    const int S = L.states;
    const auto& kids = rooted_.children[v];
    int* cost_out = final_cost_.data() + v * S;
    int* origin_out = final_origin_.data() + v * S;

    // v chosen: every child's nearest chosen vertex must sit at depth >= p.
    // All undominated depths below are < d, so v dominates them.
    {
      int total = 1;
      auto& choice = selected_choice_[v];
      choice.assign(kids.size(), -1);
      for (std::size_t i = 0; i < kids.size() && total < kInf; ++i) {
        const int* row = final_row(kids[i]);
        int best = -1;
        for (int s = L.index(std::min(L.p, L.cap), 0); s < S; ++s) {
          if (row[s] < kInf && (best < 0 || row[s] < row[best])) best = s;
        }
        if (best < 0) {
          total = kInf;
        } else {
          choice[i] = best;
          total += row[best];
        }
      }
      const int s0 = L.index(0, 0);
      if (total < kInf) {
        cost_out[s0] = total;
        origin_out[s0] = kFromSelected;
      }
    }

    // v not chosen: fold the children in one at a time.
    std::vector<int> acc(S, kInf);
    acc[L.index(L.cap, 0)] = 0;
    auto& steps = steps_[v];
    steps.assign(kids.size(), {});
    std::vector<int> next(S);
    std::vector<int> live_acc, live_child;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const int* row = final_row(kids[i]);
      auto& back = steps[i];
      back.assign(S, Back{-1, -1});
      std::fill(next.begin(), next.end(), kInf);
      live_acc.clear();
      live_child.clear();
      for (int s = 0; s < S; ++s) {
        if (acc[s] < kInf) live_acc.push_back(s);
        if (row[s] < kInf) live_child.push_back(s);
      }
      for (int sa : live_acc) {
        const int a1 = L.a_of(sa);
        const int b1 = L.b_of(sa) - 1;  // depth below v, -1 for none
        for (int sc : live_child) {
          const int a2 = std::min(L.a_of(sc) + 1, L.cap);
          if (a1 + a2 < L.p + 1) continue;
          int depth_acc = b1;
          int depth_child = L.b_of(sc) == 0 ? -1 : L.b_of(sc);
          if (depth_acc >= 0 && a2 + depth_acc <= L.d) depth_acc = -1;
          if (depth_child >= 0 && a1 + depth_child <= L.d) depth_child = -1;
          const int depth = std::max(depth_acc, depth_child);
          // Nothing outside the subtree is closer than distance 1.
          if (depth >= L.d) continue;
          const int t = L.index(std::min(a1, a2), depth + 1);
          const int c = acc[sa] + row[sc];
          if (c < next[t]) {
            next[t] = c;
            back[t] = Back{sa, sc};
          }
        }
      }
      acc.swap(next);
    }

    // Account for v itself.
    for (int sa = 0; sa < S; ++sa) {
      if (acc[sa] >= kInf) continue;
      const int a = L.a_of(sa);
      int b = L.b_of(sa);
      if (a > L.d) b = std::max(b, 1);
      if (b - 1 >= L.d) continue;
      const int t = L.index(a, b);
      if (acc[sa] < cost_out[t]) {
        cost_out[t] = acc[sa];
        origin_out[t] = sa;
      }
    }
  }

  VertexSet reconstruct(int root_state) const {
    VertexSet chosen;
    std::vector<std::pair<Vertex, int>> stack{{0, root_state}};
    while (!stack.empty()) {
      auto [v, s] = stack.back();
      stack.pop_back();
      const auto& kids = rooted_.children[v];
      const int origin = final_origin_[v * layout_.states + s];
      if (origin == kFromSelected) {
        chosen.push_back(v);
        for (std::size_t i = 0; i < kids.size(); ++i) {
          stack.emplace_back(kids[i], selected_choice_[v][i]);
        }
        continue;
      }
      if (origin >= kInf) throw InternalError("tree DP back-pointer to an unreachable state");
      int acc = origin;
      for (std::size_t i = kids.size(); i-- > 0;) {
        const Back& b = steps_[v][i][acc];
        stack.emplace_back(kids[i], b.child);
        acc = b.acc;
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  const Graph& tree_;
  Layout layout_;
  RootedTree rooted_;
  std::vector<int> final_cost_;
  std::vector<int> final_origin_;
  std::vector<std::vector<int>> selected_choice_;
  std::vector<std::vector<std::vector<Back>>> steps_;
};

}  // namespace

SolveOutcome gamma_tree(const Graph& tree, Params params) {
  check_params(params);
  if (!is_tree(tree)) throw InputError("gamma_tree requires a tree");
  if (params.p >= 2 * params.d + 1) {
    int radius = 0;
    Vertex c = tree_center(tree, radius);
    if (radius > params.d) return SolveOutcome::infeasible();
    return SolveOutcome::optimal({c});
  }
  return TreeDp(tree, params).solve();
}

SolveOutcome min_distance_dominating_tree(const Graph& tree, int d) {
  return gamma_tree(tree, Params{d, 0});
}

}  // namespace packdom
