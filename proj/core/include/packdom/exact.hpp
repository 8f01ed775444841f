#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "packdom/graph.hpp"

namespace packdom {

/// Domination radius d and packing separation p (members pairwise at
/// distance >= p+1). d < p is legal; the solvers then may report infeasible.
struct Params {
  int d = 1;
  int p = 0;

  friend bool operator==(const Params&, const Params&) = default;
};

void check_params(Params params);

enum class SolveStatus {
  kOptimal,     // gamma and a witness of that size
  kInfeasible,  // no d-distance dominating p-packing exists
  kAboveBudget, // certified gamma > budget (includes infeasible)
  kTimeout,
};

std::string to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  int gamma = 0;
  VertexSet witness;

  bool has_value() const noexcept { return status == SolveStatus::kOptimal; }

  static SolveOutcome optimal(VertexSet witness);
  static SolveOutcome infeasible() { return {SolveStatus::kInfeasible, 0, {}}; }
  static SolveOutcome above_budget() { return {SolveStatus::kAboveBudget, 0, {}}; }
  static SolveOutcome timeout() { return {SolveStatus::kTimeout, 0, {}}; }

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

bool is_d_dominating(const Graph& g, std::span<const Vertex> x, int d);
bool is_p_packing(const Graph& g, std::span<const Vertex> x, int p);

/// x is a 2-packing that cannot be extended by any vertex.
bool is_maximal_2_packing(const Graph& g, std::span<const Vertex> x);

struct SolveOptions {
  /// Decision mode: only sets of size <= budget are searched.
  std::optional<int> budget;
  std::chrono::milliseconds timeout{60000};
  /// Vertices tried first when picking a branching vertex and when building
  /// the lower bound. Gadget graphs pass one far end per X_i group here.
  /// Never affects the answer.
  std::vector<Vertex> priority;
  /// Return the lexicographically smallest minimum witness.
  bool canonical_witness = true;
};

/// Exact gamma_d^p by branch and bound. Branches on the
/// undominated vertex with the fewest compatible candidates; the bound is a
/// greedy count of undominated vertices with pairwise disjoint candidate sets.
SolveOutcome gamma_exact(const Graph& g, Params params, const SolveOptions& options = {});

/// Plain subset enumeration in increasing cardinality (lexicographic within a
/// cardinality). Refuses graphs with more than kBruteForceMaxOrder vertices.
inline constexpr std::size_t kBruteForceMaxOrder = 20;
SolveOutcome brute_force_gamma(const Graph& g, Params params);

/// A set whose distance-d balls partition V(g), found by exact-cover search.
std::optional<VertexSet> find_d_perfect_code(const Graph& g, int d);

bool is_d_perfect_code(const Graph& g, std::span<const Vertex> x, int d);

}  // namespace packdom
