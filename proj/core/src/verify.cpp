#include "packdom/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "packdom/constructive.hpp"
#include "packdom/errors.hpp"
#include "packdom/exact.hpp"
#include "packdom/generators.hpp"
#include "packdom/tree_dp.hpp"

namespace packdom {

namespace {

std::string params_text(int d, int p) {
  return "d=" + std::to_string(d) + " p=" + std::to_string(p);
}

std::string outcome_text(const SolveOutcome& o) {
  if (o.has_value()) return std::to_string(o.gamma);
  return to_string(o.status);
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void compare_dp(const Graph& t, const std::vector<int>& d_values, SuiteReport& rep) {
  for (int d : d_values) {
    for (int p = 0; p <= 2 * d + 1; ++p) {
      ++rep.cases;
      const SolveOutcome dp = gamma_tree(t, {d, p});
      const SolveOutcome bf = brute_force_gamma(t, {d, p});
      bool ok = dp.status == bf.status && dp.gamma == bf.gamma;
      if (ok && dp.has_value()) {
        ok = is_d_dominating(t, dp.witness, d) && is_p_packing(t, dp.witness, p);
      }
      if (!ok) {
        rep.failures.push_back({"mismatch",
                                params_text(d, p) + ": tree DP " + outcome_text(dp) +
                                    ", brute force " + outcome_text(bf),
                                t});
      }
    }
  }
}

}  // namespace

SuiteReport verify_dp_vs_bruteforce(const DpSweepConfig& config) {
  SuiteReport rep;
  rep.name = "dp-vs-bruteforce";
  for (std::size_t n = 1; n <= config.exhaustive_max_n; ++n) {
    enumerate_trees(n, [&](const Graph& t) { compare_dp(t, config.d_values, rep); });
  }
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.random_count; ++i) {
    const std::size_t n = draw(rng, config.random_min_n, config.random_max_n);
    compare_dp(random_tree(n, rng()), config.d_values, rep);
  }
  return rep;
}

SuiteReport verify_bounds_sweep(const BoundsSweepConfig& config) {
  SuiteReport rep;
  rep.name = "thm-bounds-sweep";
  const BoundFunctions& fn = config.bounds;
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.count; ++i) {
    const std::size_t n = draw(rng, 2, std::max<std::size_t>(config.max_n, 2));
    const Graph t = random_tree(n, rng());
    const auto st = structural_stats(t);
    const auto nn = static_cast<std::int64_t>(st.n);
    const auto l = static_cast<std::int64_t>(st.leaves);
    const auto s = static_cast<std::int64_t>(st.supports);
    auto fail = [&](const std::string& what) { rep.failures.push_back({"violation", what, t}); };

    for (int d : config.thm1_d) {
      ++rep.cases;
      const int g = gamma_tree(t, {d, 0}).gamma;
      const Rational lb = fn.thm1(nn, l, d);
      if (Rational(g) < lb) fail("thm1 d=" + std::to_string(d) + ": gamma " + std::to_string(g) + " < " + to_string(lb));
    }
    const int g20 = gamma_tree(t, {2, 0}).gamma;
    const int g22 = gamma_tree(t, {2, 2}).gamma;
    ++rep.cases;
    if (Rational(g20) < fn.thm2(nn, l, s)) {
      fail("thm2: gamma " + std::to_string(g20) + " < " + to_string(fn.thm2(nn, l, s)));
    }
    ++rep.cases;
    const IntegerBracket br = fn.thm3(nn, l, s);
    if (g22 < br.lower || g22 > br.upper) {
      fail("thm3: gamma " + std::to_string(g22) + " outside [" + std::to_string(br.lower) + ", " +
           std::to_string(br.upper) + "]");
    }
    for (int d : config.thm5_d) {
      ++rep.cases;
      const int g = d == 2 ? g22 : gamma_tree(t, {d, 2}).gamma;
      const SurdBound ub = fn.thm5(nn, d);
      if (!ub.admits(g)) fail("thm5 d=" + std::to_string(d) + ": gamma " + std::to_string(g) + " > " + ub.to_string());
    }
    if (n >= 3) {
      ++rep.cases;
      const SurdBound h = ub_henning(nn);
      if (!h.admits(g22)) fail("henning: gamma " + std::to_string(g22) + " > " + h.to_string());
    }
  }
  return rep;
}

// ---- unlabelled trees ------------------------------------------------------------

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) parts.push_back(rooted_code(t, w, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

std::string canonical_code(const Graph& t) {
  auto path = diametrical_path(t);
  const std::size_t diam = path.size() - 1;
  const Vertex none = static_cast<Vertex>(t.order());
  std::string best = rooted_code(t, path[diam / 2], none);
  if (diam % 2 == 1) best = std::min(best, rooted_code(t, path[diam / 2 + 1], none));
  return best;
}

}  // namespace

std::vector<Graph> unlabeled_trees(std::size_t n) {
  if (n == 0 || n > 16) throw InputError("unlabeled_trees supports 1 <= n <= 16");
  std::vector<Graph> level{Graph(1)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<std::string, Graph> seen;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, static_cast<Vertex>(m - 1));
        Graph bigger = Graph::from_edges(m, edges);
        seen.try_emplace(canonical_code(bigger), std::move(bigger));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

SuiteReport verify_equality_audit(const EqualityConfig& config) {
  SuiteReport rep;
  rep.name = "equality-audit";
  std::size_t f2 = 0, td = 0;
  for (std::size_t n = 1; n <= config.max_n; ++n) {
    for (const Graph& t : unlabeled_trees(n)) {
      ++rep.cases;
      EqualityAudit audit = equality_audit(t, config.d);
      f2 += audit.in_F2 ? 1 : 0;
      td += audit.in_Td ? 1 : 0;
      for (const auto& f : audit.failures) rep.failures.push_back({"violation", f, t});
    }
  }
  rep.notes.push_back({"summary",
                       std::to_string(rep.cases) + " trees, " + std::to_string(f2) + " in F_2, " +
                           std::to_string(td) + " in T_" + std::to_string(config.d),
                       std::nullopt});
  return rep;
}

// ---- reductions -------------------------------------------------------------------

CnfFormula sample_formula() {
  CnfFormula f;
  f.k = 4;
  f.clauses.push_back({Literal{1, true}, Literal{2, false}, Literal{3, false}});
  f.clauses.push_back({Literal{1, false}, Literal{2, false}, Literal{4, true}});
  return f;
}

CnfFormula random_formula(int k, std::size_t clauses, std::uint64_t seed) {
  if (k < 3) throw InputError("random_formula needs k >= 3");
  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.k = k;
  std::vector<int> vars(static_cast<std::size_t>(k));
  std::iota(vars.begin(), vars.end(), 1);
  for (std::size_t j = 0; j < clauses; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    std::array<int, 3> pick{vars[0], vars[1], vars[2]};
    std::sort(pick.begin(), pick.end());
    Clause c;
    for (std::size_t t = 0; t < 3; ++t) c[t] = Literal{pick[t], (rng() & 1U) == 0};
    f.clauses.push_back(c);
  }
  return f;
}

namespace {

std::string inline_dimacs(const CnfFormula& f) {
  std::string text = serialize_dimacs(f);
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

}  // namespace

SuiteReport verify_reductions_grid(const ReductionsConfig& config) {
  SuiteReport rep;
  rep.name = "reductions-grid";
  std::vector<CnfFormula> corpus{sample_formula()};
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.random_count; ++i) {
    const int k = static_cast<int>(draw(rng, 3, static_cast<std::size_t>(std::max(config.max_k, 3))));
    const std::size_t clauses = draw(rng, 1, std::max<std::size_t>(config.max_clauses, 1));
    corpus.push_back(random_formula(k, clauses, rng()));
  }
  for (const CnfFormula& f : corpus) {
    for (int d : config.d_values) {
      for (int p = 0; p <= 2 * d; ++p) {
        ++rep.cases;
        ReductionReport r = verify_reduction(f, d, p, config.timeout);
        if (r.agree) continue;
        std::string what = "[" + inline_dimacs(f) + "] " + params_text(d, p) + " (" +
                           to_string(r.regime) + "): ";
        if (r.inconclusive) {
          rep.failures.push_back({"inconclusive", what + "exact solve timed out", std::nullopt});
        } else {
          what += "decision " + std::string(*r.decision ? "yes" : "no") + ", oracle " +
                  (r.oracle_answer() ? "yes" : "no");
          if (!r.forward_ok) what += ", encoded oracle witness invalid";
          if (!r.backward_ok) what += ", solver witness does not decode to an accepted assignment";
          if (r.perfect_code && *r.perfect_code != r.oracle_answer()) what += ", perfect code disagrees";
          rep.failures.push_back({"disagreement", what, std::nullopt});
        }
      }
    }
  }
  return rep;
}

// ---- conjecture ------------------------------------------------------------------------

SuiteReport verify_conjecture(const ConjectureConfig& config) {
  SuiteReport rep;
  rep.name = "conjecture";
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.count; ++i) {
    const std::size_t n = draw(rng, 1, std::max<std::size_t>(config.max_n, 1));
    const Graph t = random_tree(n, rng());
    ++rep.cases;
    ConjectureProbe probe = conjecture_probe(t, config.d, config.p);
    if (!probe.holds) {
      rep.notes.push_back({"counterexample",
                           params_text(config.d, config.p) + " n=" + std::to_string(n) + ": gamma " +
                               outcome_text(probe.outcome) + " > " + probe.bound.to_string(),
                           t});
    }
  }
  return rep;
}

// ---- gadgets -----------------------------------------------------------------------------

namespace {

// gamma_2^2 by brute force, cross-checked against the branch-and-bound solver.
int gadget_gamma(const Graph& g, const std::string& name, SuiteReport& rep) {
  const SolveOutcome bf = brute_force_gamma(g, {2, 2});
  const SolveOutcome ex = gamma_exact(g, {2, 2});
  if (!(bf == ex) || !bf.has_value() || !is_maximal_2_packing(g, bf.witness)) {
    rep.failures.push_back({"inconsistent",
                            name + ": brute force " + outcome_text(bf) + ", exact " + outcome_text(ex),
                            g});
  }
  return bf.gamma;
}

void expect_value(const Graph& g, const std::string& name, int expected, SuiteReport& rep) {
  ++rep.cases;
  const int got = gadget_gamma(g, name, rep);
  if (got != expected) {
    rep.failures.push_back({"violation",
                            name + ": gamma_2^2 = " + std::to_string(got) + ", expected " +
                                std::to_string(expected),
                            g});
  }
}

}  // namespace

SuiteReport verify_section6_gadgets() {
  SuiteReport rep;
  rep.name = "section6-gadgets";
  for (int p : {2, 3}) {
    const std::string tag = "(p=" + std::to_string(p) + ")";
    Family gp = make_gp(p);
    expect_value(gp.graph, "G_p" + tag, 1, rep);
    Family gpp = make_gp_prime(p);
    expect_value(gpp.graph, "G_p'" + tag, 1 + p, rep);
    auto [a, b] = gpp.edge("e2");
    expect_value(gpp.graph.without_edge(a, b), "G_p'-e_2" + tag, 2, rep);

    ++rep.cases;
    auto [u, v] = gp.edge("e1");
    const Graph cut = gp.graph.without_edge(u, v);
    const int got = gadget_gamma(cut, "G_p-e_1" + tag, rep);
    const std::string detail = "G_p-e_1" + tag + ": brute force gamma_2^2 = " + std::to_string(got) +
                               ", stated 1+p = " + std::to_string(1 + p);
    rep.notes.push_back({got == 1 + p ? "agreement" : "discrepancy", detail, cut});
  }
  Family h2 = make_hp(2);
  expect_value(h2.graph, "H_2", 5, rep);
  auto [a, b] = h2.edge("e");
  expect_value(h2.graph.without_edge(a, b), "H_2-e", 4, rep);
  return rep;
}

// ---- spanning trees ------------------------------------------------------------------------

SuiteReport verify_spanning_trees(const SpanningConfig& config) {
  SuiteReport rep;
  rep.name = "spanning-trees";
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.count; ++i) {
    const std::size_t n = draw(rng, 1, std::max<std::size_t>(config.max_n, 1));
    const std::size_t extra = draw(rng, 0, config.max_extra);
    const Graph g = random_connected_graph(n, extra, rng());
    ++rep.cases;
    SpanningTreeResult r = spanning_tree_gamma22(g);
    bool spanning = is_tree(r.tree) && r.tree.order() == g.order();
    for (auto [x, y] : r.tree.edges()) spanning = spanning && g.has_edge(x, y);
    const int gamma_g = brute_force_gamma(g, {2, 2}).gamma;
    const int gamma_t = brute_force_gamma(r.tree, {2, 2}).gamma;
    if (!spanning || gamma_g != r.gamma_graph || gamma_t > gamma_g) {
      rep.failures.push_back({"violation",
                              "spanning tree: graph gamma " + std::to_string(gamma_g) + ", tree gamma " +
                                  std::to_string(gamma_t) + (spanning ? "" : ", not a spanning tree"),
                              g});
    }
  }
  return rep;
}

}  // namespace packdom
