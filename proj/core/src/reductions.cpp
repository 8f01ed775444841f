#include "packdom/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "packdom/errors.hpp"

namespace packdom {

// ---- DIMACS ---------------------------------------------------------------

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  long long expected = 0;
  std::vector<Literal> pending;
  int pending_line = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c" || tokens[0].front() == 'c') continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError("second header line", line_no);
      if (tokens.size() != 4 || tokens[1] != "cnf") throw ParseError("header must be 'p cnf <vars> <clauses>'", line_no);
      const long long k = parse_int(tokens[2], line_no);
      expected = parse_int(tokens[3], line_no);
      if (k < 0 || expected < 0 || k > 1'000'000) throw ParseError("header counts out of range", line_no);
      f.k = static_cast<int>(k);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before the 'p cnf' header", line_no);
    for (auto tok : tokens) {
      const long long lit = parse_int(tok, line_no);
      if (pending.empty()) pending_line = line_no;
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ParseError("clause has " + std::to_string(pending.size()) + " literals, expected 3",
                           pending_line);
        }
        if (pending[0].var == pending[1].var || pending[0].var == pending[2].var ||
            pending[1].var == pending[2].var) {
          throw ParseError("clause repeats a variable", pending_line);
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > f.k) {
        throw ParseError("variable " + std::to_string(var) + " exceeds the declared " +
                             std::to_string(f.k),
                         line_no);
      }
      pending.push_back({static_cast<int>(var), lit > 0});
      if (pending.size() > 3) throw ParseError("clause has more than 3 literals", pending_line);
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header", 0);
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0", pending_line);
  if (static_cast<long long>(f.clauses.size()) != expected) {
    throw ParseError("header declares " + std::to_string(expected) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     0);
  }
  return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.k << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.positive ? l.var : -l.var) << ' ';
    out << "0\n";
  }
  return out.str();
}

// ---- oracles ----------------------------------------------------------------

namespace {

int true_literals(const Clause& c, const Assignment& a) {
  int count = 0;
  for (const Literal& l : c) count += a[l.var - 1] == l.positive ? 1 : 0;
  return count;
}

void check_assignment(const CnfFormula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.k)) throw InputError("assignment size differs from k");
}

template <typename Accept>
std::optional<Assignment> enumerate(const CnfFormula& f, Accept accept) {
  if (f.k > kOracleMaxVariables) {
    throw InputError("oracle refuses more than " + std::to_string(kOracleMaxVariables) +
                     " variables");
  }
  const std::uint64_t total = std::uint64_t{1} << f.k;
  Assignment a(static_cast<std::size_t>(f.k));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < f.k; ++i) a[i] = ((mask >> (f.k - 1 - i)) & 1U) == 0;
    if (accept(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace

bool satisfies(const CnfFormula& f, const Assignment& a) {
  check_assignment(f, a);
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return true_literals(c, a) >= 1; });
}

bool one_in_three_satisfies(const CnfFormula& f, const Assignment& a) {
  check_assignment(f, a);
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return true_literals(c, a) == 1; });
}

std::optional<Assignment> sat_oracle(const CnfFormula& f) { return enumerate(f, satisfies); }

std::optional<Assignment> one_in_three_oracle(const CnfFormula& f) {
  return enumerate(f, one_in_three_satisfies);
}

// ---- gadgets ----------------------------------------------------------------

std::string to_string(GadgetVariant v) { return v == GadgetVariant::kG ? "G" : "H"; }

namespace {

GadgetGraph build_gadget(const CnfFormula& f, int d, GadgetVariant variant) {
  if (d < 2) throw InputError("gadget graphs need d >= 2");
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) {
      if (l.var < 1 || l.var > f.k) throw InputError("literal variable out of range");
    }
  }
  const bool h = variant == GadgetVariant::kH;
  const int path_length = h ? d : d - 1;
  const std::size_t k = static_cast<std::size_t>(f.k);
  const std::size_t ell = f.clauses.size();
  const std::size_t block = 2 * static_cast<std::size_t>(d) + 2;
  const std::size_t n = k * block + ell + 3 * ell * static_cast<std::size_t>(path_length - 1);

  GadgetGraph gg;
  gg.variant = variant;
  gg.d = d;
  std::vector<Edge> edges;
  RoleMap roles;
  auto link = [&](Vertex a, Vertex b) { edges.emplace_back(a, b); };

  for (std::size_t i = 0; i < k; ++i) {
    const std::string tag = std::to_string(i + 1);
    const auto base = static_cast<Vertex>(i * block);
    const Vertex plus = base;
    const Vertex minus = base + 1;
    auto y = [&](int t) { return static_cast<Vertex>(base + 1 + t); };
    auto z = [&](int t) { return static_cast<Vertex>(base + 1 + d + t); };
    gg.literal_plus.push_back(plus);
    gg.literal_minus.push_back(minus);
    VertexSet x;
    for (Vertex v = base; v < base + block; ++v) x.push_back(v);
    gg.gadget_set.push_back(std::move(x));
    roles[plus] = "literal:+:" + tag;
    roles[minus] = "literal:-:" + tag;
    link(plus, y(1));
    link(minus, z(1));
    for (int t = 1; t <= d; ++t) {
      roles[y(t)] = "y:" + tag + ":" + std::to_string(t);
      roles[z(t)] = "z:" + tag + ":" + std::to_string(t);
      if (t < d) {
        link(y(t), y(t + 1));
        link(z(t), z(t + 1));
      }
    }
    link(plus, z(1));
    link(minus, y(1));
    if (h) link(plus, minus);
  }

  for (std::size_t j = 0; j < ell; ++j) {
    const auto c = static_cast<Vertex>(k * block + j);
    gg.clause_vertex.push_back(c);
    roles[c] = "clause:" + std::to_string(j + 1);
  }

  auto next = static_cast<Vertex>(k * block + ell);
  for (int var = 1; var <= f.k; ++var) {
    for (std::size_t j = 0; j < ell; ++j) {
      for (const Literal& l : f.clauses[j]) {
        if (l.var != var) continue;
        const Vertex end = l.positive ? gg.literal_plus[var - 1] : gg.literal_minus[var - 1];
        std::vector<Vertex> internals;
        Vertex prev = gg.clause_vertex[j];
        for (int t = 1; t < path_length; ++t) {
          const Vertex w = next++;
          internals.push_back(w);
          roles[w] = std::string("path:") + (l.positive ? "+" : "-") + ":" + std::to_string(var) +
                     ":" + std::to_string(j + 1) + ":" + std::to_string(t);
          link(prev, w);
          prev = w;
        }
        link(prev, end);
        gg.path_internals[{var, static_cast<int>(j) + 1, l.positive}] = std::move(internals);
      }
    }
  }
  if (next != n) throw InternalError("gadget layout miscounted");
  gg.graph = Graph::from_edges(n, edges, std::move(roles));
  return gg;
}

}  // namespace

GadgetGraph build_gd(const CnfFormula& f, int d) { return build_gadget(f, d, GadgetVariant::kG); }

GadgetGraph build_hd(const CnfFormula& f, int d) { return build_gadget(f, d, GadgetVariant::kH); }

VertexSet assignment_to_set(const GadgetGraph& gg, const Assignment& a) {
  if (a.size() != gg.literal_plus.size()) throw InputError("assignment size differs from k");
  VertexSet out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(a[i] ? gg.literal_plus[i] : gg.literal_minus[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Assignment set_to_assignment(const GadgetGraph& gg, std::span<const Vertex> set) {
  VertexSet s(set.begin(), set.end());
  std::sort(s.begin(), s.end());
  auto has = [&](Vertex v) { return std::binary_search(s.begin(), s.end(), v); };
  Assignment a(gg.literal_plus.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string name = "X_" + std::to_string(i + 1);
    std::size_t inside = 0;
    for (Vertex v : gg.gadget_set[i]) inside += has(v) ? 1 : 0;
    const bool plus = has(gg.literal_plus[i]);
    const bool minus = has(gg.literal_minus[i]);
    if (inside != 1 || plus == minus) {
      throw InputError(name + " must meet the set in exactly one literal vertex (found " +
                       std::to_string(inside) + " members)");
    }
    a[i] = plus;
  }
  return a;
}

std::vector<Vertex> gadget_priority(const GadgetGraph& gg) {
  std::vector<Vertex> out;
  for (const VertexSet& x : gg.gadget_set) out.push_back(x[1 + static_cast<std::size_t>(gg.d)]);
  return out;
}

// ---- end-to-end check ------------------------------------------------------------

std::string to_string(ReductionRegime r) {
  switch (r) {
    case ReductionRegime::kSat: return "sat";
    case ReductionRegime::kOneInThree: return "1-in-3";
    case ReductionRegime::kPerfectCode: return "perfect-code";
  }
  return "unknown";
}

ReductionRegime regime_for(int d, int p) {
  if (d < 2) throw InputError("reductions need d >= 2");
  if (p < 0 || p > 2 * d) throw InputError("reductions cover 0 <= p <= 2d");
  if (p <= 2 * d - 3) return ReductionRegime::kSat;
  if (p <= 2 * d - 1) return ReductionRegime::kOneInThree;
  return ReductionRegime::kPerfectCode;
}

ReductionReport verify_reduction(const CnfFormula& f, int d, int p,
                                 std::chrono::milliseconds timeout) {
  ReductionReport rep;
  rep.params = {d, p};
  rep.regime = regime_for(d, p);
  rep.k = f.k;
  if (f.k < 1) throw InputError("reductions need at least one variable");
  const bool sat_regime = rep.regime == ReductionRegime::kSat;
  const GadgetGraph gg = rep.regime == ReductionRegime::kPerfectCode ? build_hd(f, d) : build_gd(f, d);
  rep.variant = gg.variant;
  rep.vertices = gg.graph.order();
  rep.oracle_witness = sat_regime ? sat_oracle(f) : one_in_three_oracle(f);
  auto accepted = [&](const Assignment& a) {
    return sat_regime ? satisfies(f, a) : one_in_three_satisfies(f, a);
  };

  if (rep.oracle_witness) {
    VertexSet encoded = assignment_to_set(gg, *rep.oracle_witness);
    rep.forward_ok = is_d_dominating(gg.graph, encoded, d) && is_p_packing(gg.graph, encoded, p);
  }

  SolveOptions opts;
  opts.budget = f.k;
  opts.timeout = timeout;
  opts.priority = gadget_priority(gg);
  SolveOutcome out = gamma_exact(gg.graph, rep.params, opts);
  rep.solve_status = out.status;
  if (out.status == SolveStatus::kTimeout) {
    rep.inconclusive = true;
    return rep;
  }
  rep.decision = out.has_value();
  if (out.has_value()) {
    rep.solver_witness = out.witness;
    try {
      rep.decoded = set_to_assignment(gg, out.witness);
      rep.backward_ok = accepted(*rep.decoded);
    } catch (const InputError&) {
      rep.backward_ok = false;
    }
  }
  if (rep.variant == GadgetVariant::kH) {
    rep.perfect_code = find_d_perfect_code(gg.graph, d).has_value();
  }
  rep.agree = *rep.decision == rep.oracle_answer() && rep.forward_ok && rep.backward_ok &&
              (!rep.perfect_code || *rep.perfect_code == rep.oracle_answer());
  return rep;
}

}  // namespace packdom
