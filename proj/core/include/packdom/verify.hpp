#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "packdom/bounds.hpp"
#include "packdom/graph.hpp"
#include "packdom/reductions.hpp"

namespace packdom {

struct Finding {
  std::string kind;  // "mismatch", "violation", "discrepancy", "agreement", ...
  std::string detail;
  std::optional<Graph> graph;
};

/// Outcome of one canned verification suite. `failures` make the suite fail;
/// `notes` are reportable observations (flagged discrepancies, conjecture
/// counterexamples) that do not.
struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<Finding> failures;
  std::vector<Finding> notes;

  bool passed() const { return failures.empty(); }
};

struct DpSweepConfig {
  std::size_t exhaustive_max_n = 8;
  std::size_t random_count = 500;
  std::size_t random_min_n = 9;
  std::size_t random_max_n = 14;
  std::vector<int> d_values{1, 2, 3};
  std::uint64_t seed = 1;
};

/// gamma_tree against brute_force_gamma for every p in 0..2d+1 on all
/// labelled trees up to exhaustive_max_n and on random trees.
SuiteReport verify_dp_vs_bruteforce(const DpSweepConfig& config = {});

/// The bound formulas under test; tests swap one out to check that the sweep
/// notices.
struct BoundFunctions {
  std::function<Rational(std::int64_t, std::int64_t, int)> thm1 = lb_thm1;
  std::function<Rational(std::int64_t, std::int64_t, std::int64_t)> thm2 = lb_thm2;
  std::function<IntegerBracket(std::int64_t, std::int64_t, std::int64_t)> thm3 = bounds_thm3;
  std::function<SurdBound(std::int64_t, int)> thm5 = ub_thm5;
};

struct BoundsSweepConfig {
  std::size_t count = 1000;
  std::size_t max_n = 60;
  std::vector<int> thm1_d{1, 2, 3};
  std::vector<int> thm5_d{2, 3, 4};
  std::uint64_t seed = 2;
  BoundFunctions bounds;
};

/// Every lower/upper bound against exact tree values on random trees.
SuiteReport verify_bounds_sweep(const BoundsSweepConfig& config = {});

struct EqualityConfig {
  std::size_t max_n = 10;
  int d = 2;
};

/// Equality cases of the two lower bounds against F_2 / T_d membership on
/// all unlabelled trees up to max_n.
SuiteReport verify_equality_audit(const EqualityConfig& config = {});

/// One tree per isomorphism class on n vertices (n <= 16).
std::vector<Graph> unlabeled_trees(std::size_t n);

struct ReductionsConfig {
  std::size_t random_count = 30;
  int max_k = 4;
  std::size_t max_clauses = 3;
  std::vector<int> d_values{2, 3};
  std::uint64_t seed = 3;
  std::chrono::milliseconds timeout{60000};
};

/// (x1 ∨ ¬x2 ∨ ¬x3) ∧ (¬x1 ∨ ¬x2 ∨ x4).
CnfFormula sample_formula();

/// Random formula with exactly-3 distinct-variable clauses; k >= 3.
CnfFormula random_formula(int k, std::size_t clauses, std::uint64_t seed);

/// verify_reduction for every p in 0..2d on the sample formula and random ones.
SuiteReport verify_reductions_grid(const ReductionsConfig& config = {});

struct ConjectureConfig {
  int d = 3;
  int p = 3;
  std::size_t count = 500;
  std::size_t max_n = 40;
  std::uint64_t seed = 4;
};

/// gamma_d^p <= (n - 2 sqrt(n) + d + 1)/d on random trees; a violation is
/// recorded as a note of kind "counterexample" carrying the tree.
SuiteReport verify_conjecture(const ConjectureConfig& config = {});

/// Exact values of the spanning-tree gadgets, with the G_p - e_1 value
/// reported as agreement or discrepancy against 1 + p.
SuiteReport verify_section6_gadgets();

struct SpanningConfig {
  std::size_t count = 100;
  std::size_t max_n = 14;
  std::size_t max_extra = 5;
  std::uint64_t seed = 5;
};

/// spanning_tree_gamma22 on random connected graphs, checked by brute force.
SuiteReport verify_spanning_trees(const SpanningConfig& config = {});

}  // namespace packdom
