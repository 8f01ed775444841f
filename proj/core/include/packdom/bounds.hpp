#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "packdom/exact.hpp"
#include "packdom/graph.hpp"

namespace packdom {

using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);
std::string to_string(const Rational& r);

/// Largest r with r*r <= x.
std::int64_t isqrt(std::int64_t x);

/// Exact value (base - coeff * sqrt(radicand)) / denom with denom > 0 and
/// coeff >= 0. All comparisons against integers are decided in integer
/// arithmetic; to_double() is for display only.
struct SurdBound {
  std::int64_t base = 0;
  std::int64_t coeff = 0;
  std::int64_t radicand = 0;
  std::int64_t denom = 1;

  /// gamma <= value
  bool admits(std::int64_t gamma) const;
  /// value <= t
  bool at_most(std::int64_t t) const;
  /// value < t
  bool below(std::int64_t t) const { return !admits(t); }
  /// Largest integer admitted.
  std::int64_t floor() const;
  bool is_integer() const;
  double to_double() const;
  std::string to_string() const;
};

/// gamma_d^0(T) >= (n - d*l + 2d) / (2d + 1); d >= 1.
Rational lb_thm1(std::int64_t n, std::int64_t leaves, int d);

/// gamma_2^0(T) >= (n - l - s + 4) / 5.
Rational lb_thm2(std::int64_t n, std::int64_t leaves, std::int64_t supports);

struct IntegerBracket {
  std::int64_t lower = 0;
  std::int64_t upper = 0;

  friend bool operator==(const IntegerBracket&, const IntegerBracket&) = default;
};

/// ceil((n - l - s + 4)/5) <= gamma_2^2(T) <= floor((n + 3s - 1)/5); n >= 2.
IntegerBracket bounds_thm3(std::int64_t n, std::int64_t leaves, std::int64_t supports);

/// gamma_d^2(T) <= (n - 2 sqrt(n) + d + 1) / d; d >= 2, n >= 1.
SurdBound ub_thm5(std::int64_t n, int d);

/// gamma_2^2(T) <= (n + 3 - 2 sqrt(n)) / 2; n >= 3.
SurdBound ub_henning(std::int64_t n);

struct UpperBoundComparison {
  std::int64_t thm3_upper = 0;  // floor((n + 3s - 1)/5)
  SurdBound henning;
  bool thm3_smaller = false;      // floored bound strictly below Henning's
  bool thm3_raw_smaller = false;  // (n + 3s - 1)/5 strictly below Henning's
};

UpperBoundComparison compare_thm3_henning(std::int64_t n, std::int64_t supports);

/// Leaves pairwise at distance == 2d (mod 2d+1).
bool in_family_Td(const Graph& tree, int d);

/// Support vertices pairwise at distance == 2 (mod 5), stars K_{1,m} (m >= 2)
/// excluded. K_1 is a member.
bool in_family_F2(const Graph& tree);

struct EqualityAudit {
  StructuralStats stats;
  int d = 2;
  int gamma20 = 0;  // gamma_2^0
  int gammad0 = 0;  // gamma_d^0
  bool thm2_equality = false;  // 5 * gamma_2^0 == n - l - s + 4
  bool thm1_equality = false;  // (2d+1) * gamma_d^0 == n - d*l + 2d
  bool in_F2 = false;
  bool in_Td = false;
  std::vector<std::string> failures;

  bool consistent() const { return failures.empty(); }
};

/// Exact gamma values by tree DP, checked against both membership predicates
/// and both lower bounds. Contradictions are collected in `failures`.
EqualityAudit equality_audit(const Graph& tree, int d = 2);

struct ConjectureProbe {
  Params params;
  std::int64_t n = 0;
  SolveOutcome outcome;
  SurdBound bound;
  bool holds = true;
};

/// Compares gamma_d^p (3 <= p <= d) against (n - 2 sqrt(n) + d + 1)/d.
ConjectureProbe conjecture_probe(const Graph& tree, int d, int p);

struct BoundCheck {
  std::string name;    // e.g. "thm2-lower"
  std::string params;  // e.g. "d=2,p=0"
  std::string bound;   // exact form
  double approx = 0;
  int exact = 0;
  bool holds = true;
};

/// Every bound applicable to a tree, alongside the exact values.
struct BoundsReport {
  StructuralStats stats;
  int d = 2;
  std::vector<BoundCheck> checks;
  bool in_Td = false;
  bool in_F2 = false;
  bool thm1_equality = false;
  bool thm2_equality = false;
  std::optional<UpperBoundComparison> henning_vs_thm3;

  bool all_hold() const;
};

BoundsReport bounds_report(const Graph& tree, int d = 2);

/// Bounds at or below zero are reported as 1, since gamma >= 1 always.
std::int64_t clamp_to_one(std::int64_t value);

}  // namespace packdom
