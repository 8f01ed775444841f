#pragma once

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "packdom/exact.hpp"
#include "packdom/graph.hpp"

namespace packdom {

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF in which every clause has three literals over distinct variables.
struct CnfFormula {
  int k = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// DIMACS "p cnf k m" with 0-terminated clauses; 'c' lines are comments.
/// Throws ParseError on anything that is not an exact-3 distinct-variable
/// clause list matching the header.
CnfFormula parse_dimacs(std::string_view text);
std::string serialize_dimacs(const CnfFormula& f);

/// truth[i] is the value of variable i+1.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& a);
bool one_in_three_satisfies(const CnfFormula& f, const Assignment& a);

/// Exhaustive search, assignments ordered lexicographically with true
/// before false and variable 1 most significant.
inline constexpr int kOracleMaxVariables = 24;
std::optional<Assignment> sat_oracle(const CnfFormula& f);
std::optional<Assignment> one_in_three_oracle(const CnfFormula& f);

enum class GadgetVariant { kG, kH };

std::string to_string(GadgetVariant v);

/// Vertex layout: per variable i, x_i^+, x_i^-, y_i^1..y_i^d, z_i^1..z_i^d;
/// then one vertex per clause; then the internal vertices of the
/// clause-literal paths ordered by (variable, clause, position from the
/// clause end).
struct GadgetGraph {
  Graph graph;
  GadgetVariant variant = GadgetVariant::kG;
  int d = 2;
  std::vector<Vertex> literal_plus;   // by variable index - 1
  std::vector<Vertex> literal_minus;
  std::vector<Vertex> clause_vertex;  // by clause index
  std::vector<VertexSet> gadget_set;  // X_i, 2d+2 vertices each
  /// (variable, clause, positive) -> internal vertices from the clause end.
  std::map<std::tuple<int, int, bool>, std::vector<Vertex>> path_internals;

  int k() const { return static_cast<int>(literal_plus.size()); }
};

/// G_d(F): X_i gadgets without the x^+x^- edge, clause paths of length d-1.
GadgetGraph build_gd(const CnfFormula& f, int d);
/// H_d(F): with the x^+x^- edge and clause paths of length d.
GadgetGraph build_hd(const CnfFormula& f, int d);

/// {x_i^+ : a_i} ∪ {x_i^- : not a_i}.
VertexSet assignment_to_set(const GadgetGraph& gg, const Assignment& a);

/// Inverse of assignment_to_set. Throws InputError naming the first X_i that
/// does not meet the set in exactly one literal vertex.
Assignment set_to_assignment(const GadgetGraph& gg, std::span<const Vertex> set);

/// Far ends y_i^d, one per gadget, used as the solver's branching hint.
std::vector<Vertex> gadget_priority(const GadgetGraph& gg);

enum class ReductionRegime { kSat, kOneInThree, kPerfectCode };

std::string to_string(ReductionRegime r);

/// Which gadget and oracle apply to (d, p): p <= 2d-3 on G_d with SAT,
/// p in {2d-2, 2d-1} on G_d with 1-in-3, p = 2d on H_d with 1-in-3.
ReductionRegime regime_for(int d, int p);

struct ReductionReport {
  Params params;
  ReductionRegime regime = ReductionRegime::kSat;
  GadgetVariant variant = GadgetVariant::kG;
  int k = 0;
  std::size_t vertices = 0;
  std::optional<Assignment> oracle_witness;
  SolveStatus solve_status = SolveStatus::kOptimal;
  std::optional<bool> decision;  // gamma <= k; empty on timeout
  VertexSet solver_witness;
  std::optional<Assignment> decoded;
  bool forward_ok = true;   // oracle assignment encodes to a valid set
  bool backward_ok = true;  // solver witness decodes to an accepted assignment
  std::optional<bool> perfect_code;  // H_d only
  bool inconclusive = false;
  bool agree = false;

  bool oracle_answer() const { return oracle_witness.has_value(); }
};

/// Builds the gadget for (d, p), decides gamma_d^p <= k exactly with the
/// gadget hint, and compares with the matching oracle in both directions.
ReductionReport verify_reduction(const CnfFormula& f, int d, int p,
                                 std::chrono::milliseconds timeout = std::chrono::milliseconds(60000));

}  // namespace packdom
