#include "report.hpp"

#include <cstdint>
#include <cstdio>

namespace packdom::cli {

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json out{{"n", g.order()}, {"edges", std::move(edges)}};
  if (!g.roles().empty()) {
    Json roles = Json::object();
    for (const auto& [v, tag] : g.roles()) roles[std::to_string(v)] = tag;
    out["roles"] = std::move(roles);
  }
  return out;
}

Json to_json(const StructuralStats& s) {
  Json out{{"n", s.n}, {"leaves", s.leaves}, {"supports", s.supports}};
  out["radius"] = s.radius ? Json(*s.radius) : Json(nullptr);
  out["diameter"] = s.diameter ? Json(*s.diameter) : Json(nullptr);
  return out;
}

Json to_json(const SolveOutcome& o) {
  Json out{{"status", to_string(o.status)}};
  if (o.has_value()) {
    out["gamma"] = o.gamma;
    out["witness"] = o.witness;
  }
  return out;
}

Json to_json(const BoundsReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"params", c.params},
                      {"bound", c.bound},
                      {"approx", c.approx},
                      {"exact", c.exact},
                      {"holds", c.holds}});
  }
  Json out{{"stats", to_json(r.stats)},
           {"d", r.d},
           {"checks", std::move(checks)},
           {"memberships", {{"T_d", r.in_Td}, {"F_2", r.in_F2}}},
           {"equality", {{"thm1", r.thm1_equality}, {"thm2", r.thm2_equality}}},
           {"allHold", r.all_hold()}};
  if (r.henning_vs_thm3) {
    const auto& h = *r.henning_vs_thm3;
    out["henningVsThm3"] = {{"thm3Upper", h.thm3_upper},
                            {"henning", h.henning.to_string()},
                            {"henningApprox", h.henning.to_double()},
                            {"thm3Smaller", h.thm3_smaller},
                            {"thm3RawSmaller", h.thm3_raw_smaller}};
  }
  return out;
}

Json to_json(const ConstructionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"label", s.label}, {"processed", s.processed}, {"added", s.added}});
  }
  return {{"steps", std::move(steps)},
          {"final", t.final_set},
          {"size", t.final_set.size()},
          {"sizeBound", t.size_bound},
          {"sizeBoundText", t.size_bound_text}};
}

Json to_json(const SpanningTreeResult& r) {
  return {{"tree", to_json(r.tree)}, {"witness", r.witness}, {"gammaGraph", r.gamma_graph}};
}

Json to_json(const EdgeSplit& s) {
  return {{"edge", {s.u, s.v}},
          {"componentU", {{"vertices", s.component_u.parent_vertices()}, {"stats", to_json(s.stats_u)}}},
          {"componentV", {{"vertices", s.component_v.parent_vertices()}, {"stats", to_json(s.stats_v)}}}};
}

Json to_json(const Assignment& a) {
  Json out = Json::array();
  for (bool b : a) out.push_back(b);
  return out;
}

Json to_json(const ReductionReport& r) {
  Json out{{"d", r.params.d},
           {"p", r.params.p},
           {"regime", to_string(r.regime)},
           {"variant", to_string(r.variant)},
           {"k", r.k},
           {"vertices", r.vertices},
           {"oracle", r.oracle_answer()},
           {"oracleWitness", r.oracle_witness ? to_json(*r.oracle_witness) : Json(nullptr)},
           {"solveStatus", to_string(r.solve_status)},
           {"decision", r.decision ? Json(*r.decision) : Json(nullptr)},
           {"solverWitness", r.solver_witness},
           {"decoded", r.decoded ? to_json(*r.decoded) : Json(nullptr)},
           {"forwardOk", r.forward_ok},
           {"backwardOk", r.backward_ok}};
  out["perfectCode"] = r.perfect_code ? Json(*r.perfect_code) : Json(nullptr);
  out["inconclusive"] = r.inconclusive;
  out["agree"] = r.agree;
  return out;
}

namespace {

Json finding_json(const Finding& f) {
  Json out{{"kind", f.kind}, {"detail", f.detail}};
  if (f.graph) out["graph"] = serialize_edge_list(*f.graph);
  return out;
}

}  // namespace

Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(finding_json(f));
  Json notes = Json::array();
  for (const auto& f : r.notes) notes.push_back(finding_json(f));
  return {{"suite", r.name},
          {"cases", r.cases},
          {"passed", r.passed()},
          {"failures", std::move(failures)},
          {"notes", std::move(notes)}};
}

}  // namespace packdom::cli
