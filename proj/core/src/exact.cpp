#include "packdom/exact.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <limits>
#include <tuple>

#include "packdom/errors.hpp"

namespace packdom {

void check_params(Params params) {
  if (params.d < 0 || params.p < 0) throw InputError("d and p must be non-negative");
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kAboveBudget: return "above-budget";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

SolveOutcome SolveOutcome::optimal(VertexSet witness) {
  std::sort(witness.begin(), witness.end());
  int gamma = static_cast<int>(witness.size());
  return {SolveStatus::kOptimal, gamma, std::move(witness)};
}

namespace {

bool valid_set(const Graph& g, std::span<const Vertex> x) {
  VertexSet sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : sorted) check_vertex(g, v);
  return true;
}

}  // namespace

bool is_d_dominating(const Graph& g, std::span<const Vertex> x, int d) {
  if (!valid_set(g, x)) return false;
  if (g.order() == 0) return true;
  if (x.empty()) return false;
  auto dist = bfs_distances(g, x);
  return std::all_of(dist.begin(), dist.end(),
                     [d](int dv) { return dv != kUnreachable && dv <= d; });
}

bool is_p_packing(const Graph& g, std::span<const Vertex> x, int p) {
  if (!valid_set(g, x)) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto dist = bfs_distances(g, x[i]);
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (dist[x[j]] != kUnreachable && dist[x[j]] < p + 1) return false;
    }
  }
  return true;
}

bool is_maximal_2_packing(const Graph& g, std::span<const Vertex> x) {
  if (!is_p_packing(g, x, 2)) return false;
  VertexSet extended(x.begin(), x.end());
  std::sort(extended.begin(), extended.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::binary_search(extended.begin(), extended.end(), v)) continue;
    VertexSet bigger = extended;
    bigger.push_back(v);
    if (is_p_packing(g, bigger, 2)) return false;
  }
  return true;
}

bool is_d_perfect_code(const Graph& g, std::span<const Vertex> x, int d) {
  if (!valid_set(g, x)) return false;
  std::vector<int> hits(g.order(), 0);
  for (Vertex c : x) {
    for (Vertex u : ball(g, c, d)) ++hits[u];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// ---- branch and bound ------------------------------------------------------

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Clock = std::chrono::steady_clock;

struct Instance {
  std::size_t n = 0;
  std::vector<Bits> cover;     // N_d[v]
  std::vector<Bits> conflict;  // N_p[v]: vertices excluded once v is chosen
  std::vector<int> rank;       // scan priority, lower first
};

Instance make_instance(const Graph& g, Params params, std::span<const Vertex> priority) {
  Instance inst;
  inst.n = g.order();
  inst.cover.assign(inst.n, Bits(inst.n));
  inst.conflict.assign(inst.n, Bits(inst.n));
  for (Vertex v = 0; v < inst.n; ++v) {
    auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < inst.n; ++u) {
      if (dist[u] == kUnreachable) continue;
      if (dist[u] <= params.d) inst.cover[v].set(u);
      if (dist[u] <= params.p) inst.conflict[v].set(u);
    }
  }
  inst.rank.resize(inst.n);
  for (Vertex v = 0; v < inst.n; ++v) inst.rank[v] = static_cast<int>(inst.n + v);
  int r = 0;
  for (Vertex v : priority) {
    check_vertex(g, v);
    if (inst.rank[v] >= static_cast<int>(inst.n)) inst.rank[v] = r++;
  }
  return inst;
}

struct Need {
  std::size_t count;
  int rank;
  Vertex v;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, Clock::time_point deadline)
      : inst_(inst), deadline_(deadline) {}

  // Looks for a dominating packing that extends `chosen` (already folded into
  // `dominated` and `allowed`) with fewer than `bound` members. With
  // `first_only` the search stops at the first hit; otherwise the bound keeps
  // tightening until the space is exhausted, so the last hit is optimal.
  bool run(std::vector<Vertex> chosen, const Bits& dominated, const Bits& allowed,
           std::size_t bound, bool first_only) {
    best_.reset();
    bound_ = bound;
    first_only_ = first_only;
    stop_ = timed_out_;
    dfs(dominated, allowed, chosen);
    return best_.has_value();
  }

  bool timed_out() const noexcept { return timed_out_; }
  const std::optional<VertexSet>& best() const noexcept { return best_; }

 private:
  void dfs(const Bits& dominated, const Bits& allowed, std::vector<Vertex>& chosen) {
    if (stop_) return;
    if ((++nodes_ & 0x3ff) == 0 && Clock::now() > deadline_) {
      timed_out_ = stop_ = true;
      return;
    }
    if (dominated.all()) {
      if (chosen.size() < bound_) {
        best_ = VertexSet(chosen.begin(), chosen.end());
        std::sort(best_->begin(), best_->end());
        bound_ = chosen.size();
        if (first_only_) stop_ = true;
      }
      return;
    }
    if (chosen.size() + 1 >= bound_) return;

    std::vector<Need> needs;
    Bits open = ~dominated;
    for (auto v = open.find_first(); v != Bits::npos; v = open.find_next(v)) {
      std::size_t count = (inst_.cover[v] & allowed).count();
      if (count == 0) return;
      needs.push_back({count, inst_.rank[v], static_cast<Vertex>(v)});
    }
    std::sort(needs.begin(), needs.end(), [](const Need& a, const Need& b) {
      return std::tie(a.count, a.rank) < std::tie(b.count, b.rank);
    });

    // Undominated vertices with pairwise disjoint candidate sets each need
    // a distinct new member.
    std::size_t lower = 0;
    Bits used(inst_.n);
    for (const auto& need : needs) {
      Bits cand = inst_.cover[need.v] & allowed;
      if (!cand.intersects(used)) {
        ++lower;
        used |= cand;
      }
    }
    if (chosen.size() + lower >= bound_) return;

    const Vertex branch = needs.front().v;
    Bits remaining = allowed;
    Bits candidates = inst_.cover[branch] & allowed;
    for (auto c = candidates.find_first(); c != Bits::npos; c = candidates.find_next(c)) {
      chosen.push_back(static_cast<Vertex>(c));
      dfs(dominated | inst_.cover[c], remaining - inst_.conflict[c], chosen);
      chosen.pop_back();
      if (stop_ || chosen.size() + 1 >= bound_) return;
      // Every extension containing c has been explored.
      remaining.reset(c);
    }
  }

  const Instance& inst_;
  Clock::time_point deadline_;
  std::optional<VertexSet> best_;
  std::size_t bound_ = 0;
  bool first_only_ = false;
  bool stop_ = false;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

// Greedy lexicographic refinement: fix members one at a time, smallest
// identifier first, keeping a completion of size gamma feasible.
std::optional<VertexSet> lex_smallest_witness(const Instance& inst, BranchAndBound& search,
                                              std::size_t gamma) {
  std::vector<Vertex> fixed;
  Bits dominated(inst.n);
  Bits allowed(inst.n);
  allowed.set();
  for (Vertex v = 0; v < inst.n && fixed.size() < gamma; ++v) {
    if (!allowed.test(v)) continue;
    allowed.reset(v);
    auto trial = fixed;
    trial.push_back(v);
    Bits trial_dominated = dominated | inst.cover[v];
    Bits trial_allowed = allowed - inst.conflict[v];
    if (search.run(trial, trial_dominated, trial_allowed, gamma + 1, true)) {
      fixed = std::move(trial);
      dominated = std::move(trial_dominated);
      allowed = std::move(trial_allowed);
    }
    if (search.timed_out()) return std::nullopt;
  }
  if (fixed.size() != gamma || !dominated.all()) {
    throw InternalError("lexicographic witness refinement lost feasibility");
  }
  return VertexSet(fixed.begin(), fixed.end());
}

void check_solvable_input(const Graph& g) {
  if (g.order() == 0) throw InputError("empty graph");
}

// Per component, the smallest vertex whose ball of radius d covers the whole
// component; empty if some component has none.
std::optional<VertexSet> component_centres(const Graph& g, int d) {
  const std::size_t n = g.order();
  std::vector<char> placed(n, 0);
  VertexSet out;
  for (Vertex start = 0; start < n; ++start) {
    if (placed[start]) continue;
    auto reach = bfs_distances(g, start);
    std::optional<Vertex> centre;
    for (Vertex v = 0; v < n; ++v) {
      if (reach[v] == kUnreachable) continue;
      placed[v] = 1;
      if (centre) continue;
      auto dist = bfs_distances(g, v);
      // Unreachable entries belong to other components.
      if (std::all_of(dist.begin(), dist.end(), [d](int x) { return x == kUnreachable || x <= d; })) {
        centre = v;
      }
    }
    if (!centre) return std::nullopt;
    out.push_back(*centre);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SolveOutcome gamma_exact(const Graph& g, Params params, const SolveOptions& options) {
  check_params(params);
  check_solvable_input(g);
  const auto deadline = Clock::now() + options.timeout;
  const std::size_t budget_bound =
      options.budget ? static_cast<std::size_t>(std::max(*options.budget, 0)) + 1
                     : g.order() + 1;

  // p >= 2d+1: two members of one component would leave a vertex between
  // their balls undominated, so each component needs a single centre.
  if (params.p >= 2 * params.d + 1) {
    auto centres = component_centres(g, params.d);
    if (!centres) return SolveOutcome::infeasible();
    if (centres->size() >= budget_bound) return SolveOutcome::above_budget();
    return SolveOutcome::optimal(std::move(*centres));
  }

  const Instance inst = make_instance(g, params, options.priority);
  BranchAndBound search(inst, deadline);
  Bits none(inst.n);
  Bits all(inst.n);
  all.set();
  search.run({}, none, all, budget_bound, false);
  if (search.timed_out()) return SolveOutcome::timeout();
  if (!search.best()) {
    return options.budget ? SolveOutcome::above_budget() : SolveOutcome::infeasible();
  }
  VertexSet witness = *search.best();
  if (options.canonical_witness) {
    auto canonical = lex_smallest_witness(inst, search, witness.size());
    if (!canonical) return SolveOutcome::timeout();
    witness = std::move(*canonical);
  }
  return SolveOutcome::optimal(std::move(witness));
}

// ---- brute force -----------------------------------------------------------

SolveOutcome brute_force_gamma(const Graph& g, Params params) {
  check_params(params);
  check_solvable_input(g);
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw InputError("brute_force_gamma refuses graphs with more than " +
                     std::to_string(kBruteForceMaxOrder) + " vertices");
  }
  using Mask = std::uint32_t;
  std::vector<Mask> cover(n, 0), conflict(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < n; ++u) {
      if (dist[u] == kUnreachable) continue;
      if (dist[u] <= params.d) cover[v] |= Mask{1} << u;
      if (dist[u] <= params.p) conflict[v] |= Mask{1} << u;
    }
  }
  const Mask everything = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;

  std::vector<Vertex> pick;
  for (std::size_t k = 1; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      Mask set = 0, covered = 0;
      for (Vertex v : pick) {
        set |= Mask{1} << v;
        covered |= cover[v];
      }
      bool packing = true;
      for (Vertex v : pick) {
        if ((conflict[v] & set) != (Mask{1} << v)) {
          packing = false;
          break;
        }
      }
      if (covered == everything && packing) return SolveOutcome::optimal(pick);

      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return SolveOutcome::infeasible();
}

// ---- perfect codes ---------------------------------------------------------

namespace {

class ExactCover {
 public:
  explicit ExactCover(std::vector<Bits> balls) : balls_(std::move(balls)) {}

  bool search(Bits& covered, std::vector<Vertex>& chosen) {
    if (covered.all()) return true;
    // Uncovered vertex with the fewest balls that would fit.
    std::optional<Vertex> pivot;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    Bits open = ~covered;
    for (auto u = open.find_first(); u != Bits::npos; u = open.find_next(u)) {
      std::size_t options = 0;
      for (auto x = balls_[u].find_first(); x != Bits::npos; x = balls_[u].find_next(x)) {
        if (!balls_[x].intersects(covered)) ++options;
      }
      if (options == 0) return false;
      if (options < fewest) {
        fewest = options;
        pivot = static_cast<Vertex>(u);
      }
    }
    const Bits& around = balls_[*pivot];
    for (auto x = around.find_first(); x != Bits::npos; x = around.find_next(x)) {
      if (balls_[x].intersects(covered)) continue;
      covered |= balls_[x];
      chosen.push_back(static_cast<Vertex>(x));
      if (search(covered, chosen)) return true;
      chosen.pop_back();
      covered -= balls_[x];
    }
    return false;
  }

 private:
  // Ball membership is symmetric, so balls_[u] also lists the centres whose
  // ball contains u.
  std::vector<Bits> balls_;
};

}  // namespace

std::optional<VertexSet> find_d_perfect_code(const Graph& g, int d) {
  if (d < 1) throw InputError("perfect codes need d >= 1");
  check_solvable_input(g);
  const std::size_t n = g.order();
  std::vector<Bits> balls(n, Bits(n));
  for (Vertex v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    for (Vertex u = 0; u < n; ++u) {
      if (dist[u] != kUnreachable && dist[u] <= d) balls[v].set(u);
    }
  }
  ExactCover cover(std::move(balls));
  Bits covered(n);
  std::vector<Vertex> chosen;
  if (!cover.search(covered, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace packdom
