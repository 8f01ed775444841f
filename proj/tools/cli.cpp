#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "packdom/errors.hpp"
#include "packdom/generators.hpp"
#include "packdom/tree_dp.hpp"
#include "report.hpp"

#ifndef PACKDOM_VERSION
#define PACKDOM_VERSION "0.0.0"
#endif

namespace packdom::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  std::string graph_file;
  std::string cnf_file;
  int d = 2;
  int p = 0;
  std::optional<int> budget;
  bool brute_force = false;
  std::optional<long long> timeout_ms;
  std::string algorithm;
  std::string reduce_action;
  std::string family;
  std::string suite;
  std::string format = "el";
  std::string out_file;
  std::string counterexample_dir = ".";
  std::size_t n = 10;
  std::size_t extra = 0;
  std::size_t legs = 3;
  std::size_t length = 2;
  std::vector<std::size_t> multiples;
  int s = 1;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::optional<std::size_t> count;
  std::optional<std::size_t> max_n;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write " + path);
  o << text;
}

std::chrono::milliseconds solve_timeout(const Options& opt) {
  if (opt.timeout_ms) return std::chrono::milliseconds(*opt.timeout_ms);
  const char* env = std::getenv("PACKDOM_TIMEOUT_MS");
  if (env == nullptr || *env == '\0') return std::chrono::milliseconds(60000);
  char* end = nullptr;
  const long long ms = std::strtoll(env, &end, 10);
  if (*end != '\0' || ms <= 0) throw InputError("PACKDOM_TIMEOUT_MS must be a positive integer");
  return std::chrono::milliseconds(ms);
}

// "y:<i>:<d>" tags mark the far end of each gadget.
std::vector<Vertex> gadget_hint(const Graph& g, int d) {
  std::vector<Vertex> out;
  const std::string suffix = ":" + std::to_string(d);
  for (const auto& [v, tag] : g.roles()) {
    if (tag.starts_with("y:") && tag.ends_with(suffix) &&
        std::count(tag.begin(), tag.end(), ':') == 2) {
      out.push_back(v);
    }
  }
  return out;
}

// "# marked <name> <u> <v>" comment lines of an edge-list file.
std::vector<MarkedEdge> marked_edges(const std::string& text) {
  std::vector<MarkedEdge> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string hash, word, name;
    Vertex u = 0, v = 0;
    if (ls >> hash >> word >> name >> u >> v && hash == "#" && word == "marked") {
      out.push_back({name, {u, v}});
    }
  }
  return out;
}

std::string graph_text(const Graph& g, const std::vector<MarkedEdge>& marked,
                       const std::string& format) {
  if (format == "dot") return export_dot(g, marked);
  if (format == "json") {
    Json j = to_json(g);
    Json m = Json::array();
    for (const auto& e : marked) m.push_back({{"name", e.name}, {"edge", {e.edge.first, e.edge.second}}});
    if (!marked.empty()) j["marked"] = std::move(m);
    return j.dump(2) + "\n";
  }
  std::string text = serialize_edge_list(g);
  for (const auto& e : marked) {
    text += "# marked " + e.name + " " + std::to_string(e.edge.first) + " " +
            std::to_string(e.edge.second) + "\n";
  }
  return text;
}

struct Run {
  Json params = Json::object();
  Json result;
  std::string digest_source;
  bool has_input = false;
  int exit_code = kExitOk;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> raw_output;  // printed instead of a report
};

Graph load_graph(const Options& opt, Run& run) {
  std::string text = read_file(opt.graph_file);
  run.digest_source = text;
  run.has_input = true;
  return parse_edge_list(text);
}

CnfFormula load_cnf(const Options& opt, Run& run) {
  std::string text = read_file(opt.cnf_file);
  run.digest_source = text;
  run.has_input = true;
  return parse_dimacs(text);
}

int outcome_exit(const SolveOutcome& o) {
  switch (o.status) {
    case SolveStatus::kOptimal: return kExitOk;
    case SolveStatus::kTimeout: return kExitTimeout;
    default: return kExitNegative;
  }
}

void do_solve(const Options& opt, Run& run, bool tree) {
  Graph g = load_graph(opt, run);
  run.params = {{"d", opt.d}, {"p", opt.p}};
  SolveOutcome o;
  if (tree) {
    o = gamma_tree(g, {opt.d, opt.p});
    if (opt.budget && o.has_value() && o.gamma > *opt.budget) o = SolveOutcome::above_budget();
  } else if (opt.brute_force) {
    run.params["bruteForce"] = true;
    o = brute_force_gamma(g, {opt.d, opt.p});
    if (opt.budget && o.has_value() && o.gamma > *opt.budget) o = SolveOutcome::above_budget();
  } else {
    SolveOptions so;
    so.budget = opt.budget;
    so.timeout = solve_timeout(opt);
    so.priority = gadget_hint(g, opt.d);
    o = gamma_exact(g, {opt.d, opt.p}, so);
  }
  if (opt.budget) {
    run.params["budget"] = *opt.budget;
    if (!o.has_value() && o.status != SolveStatus::kTimeout) o = SolveOutcome::above_budget();
  }
  run.result = to_json(o);
  run.exit_code = outcome_exit(o);
}

void do_bounds(const Options& opt, Run& run) {
  Graph g = load_graph(opt, run);
  run.params = {{"d", opt.d}};
  BoundsReport r = bounds_report(g, opt.d);
  run.result = to_json(r);
  run.exit_code = r.all_hold() ? kExitOk : kExitNegative;
}

void do_construct(const Options& opt, Run& run) {
  Graph g = load_graph(opt, run);
  run.params = {{"algorithm", opt.algorithm}};
  if (opt.algorithm == "peel22") {
    run.result = to_json(peel_gamma22_upper(g));
  } else if (opt.algorithm == "thm5") {
    run.params["d"] = opt.d;
    run.result = to_json(construct_gammad2(g, opt.d));
  } else if (opt.algorithm == "spanning") {
    try {
      run.result = to_json(spanning_tree_gamma22(g, solve_timeout(opt)));
    } catch (const TimeoutError&) {
      run.result = {{"status", "timeout"}};
      run.exit_code = kExitTimeout;
    }
  } else {
    run.result = to_json(split_edge_f2(g));
  }
}

void do_reduce(const Options& opt, Run& run) {
  CnfFormula f = load_cnf(opt, run);
  run.params = {{"action", opt.reduce_action}, {"d", opt.d}};
  if (opt.reduce_action == "verify") {
    run.params["p"] = opt.p;
    ReductionReport r = verify_reduction(f, opt.d, opt.p, solve_timeout(opt));
    run.result = to_json(r);
    run.exit_code = r.inconclusive ? kExitTimeout : r.agree ? kExitOk : kExitNegative;
    return;
  }
  GadgetGraph gg = opt.reduce_action == "build-gd" ? build_gd(f, opt.d) : build_hd(f, opt.d);
  run.raw_output = graph_text(gg.graph, {}, opt.format);
}

void do_generate(const Options& opt, Run& run) {
  Family fam;
  const std::string& f = opt.family;
  if (f == "path") fam.graph = make_path(opt.n);
  else if (f == "star") fam.graph = make_star(opt.n);
  else if (f == "cycle") fam.graph = make_cycle(opt.n);
  else if (f == "spider") fam.graph = make_spider(opt.legs, opt.length);
  else if (f == "td-spider") fam.graph = make_Td_spider(opt.d, opt.multiples);
  else if (f == "fig3") fam.graph = make_fig3_tree(opt.d, opt.s);
  else if (f == "gp") fam = make_gp(opt.p);
  else if (f == "gp-prime") fam = make_gp_prime(opt.p);
  else if (f == "hp") fam = make_hp(opt.p);
  else if (f == "random-tree") fam.graph = random_tree(opt.n, opt.seed);
  else if (f == "random-graph") fam.graph = random_connected_graph(opt.n, opt.extra, opt.seed);
  else throw InputError("unknown family " + f);
  std::string text = graph_text(fam.graph, fam.marked, opt.format);
  if (!opt.out_file.empty()) {
    write_file(opt.out_file, text);
    run.raw_output = "";
  } else {
    run.raw_output = text;
  }
}

void do_verify(const Options& opt, Run& run) {
  run.params = {{"suite", opt.suite}};
  auto note = [&](const char* key, std::size_t v) { run.params[key] = v; };
  SuiteReport rep;
  const std::string& s = opt.suite;
  if (s == "dp-vs-bruteforce") {
    DpSweepConfig c;
    if (opt.max_n) c.exhaustive_max_n = *opt.max_n;
    if (opt.count) c.random_count = *opt.count;
    if (opt.seed_given) c.seed = opt.seed;
    note("exhaustiveMaxN", c.exhaustive_max_n);
    note("randomCount", c.random_count);
    run.seed = c.seed;
    rep = verify_dp_vs_bruteforce(c);
  } else if (s == "thm-bounds-sweep") {
    BoundsSweepConfig c;
    if (opt.max_n) c.max_n = *opt.max_n;
    if (opt.count) c.count = *opt.count;
    if (opt.seed_given) c.seed = opt.seed;
    note("count", c.count);
    note("maxN", c.max_n);
    run.seed = c.seed;
    rep = verify_bounds_sweep(c);
  } else if (s == "equality-audit") {
    EqualityConfig c;
    if (opt.max_n) c.max_n = *opt.max_n;
    c.d = opt.d;
    note("maxN", c.max_n);
    run.params["d"] = c.d;
    rep = verify_equality_audit(c);
  } else if (s == "reductions-grid") {
    ReductionsConfig c;
    if (opt.count) c.random_count = *opt.count;
    if (opt.seed_given) c.seed = opt.seed;
    c.timeout = solve_timeout(opt);
    note("count", c.random_count);
    run.seed = c.seed;
    rep = verify_reductions_grid(c);
  } else if (s == "conjecture") {
    ConjectureConfig c;
    c.d = opt.d;
    c.p = opt.p;
    if (opt.max_n) c.max_n = *opt.max_n;
    if (opt.count) c.count = *opt.count;
    if (opt.seed_given) c.seed = opt.seed;
    run.params["d"] = c.d;
    run.params["p"] = c.p;
    note("count", c.count);
    note("maxN", c.max_n);
    run.seed = c.seed;
    rep = verify_conjecture(c);
    std::size_t index = 0;
    Json files = Json::array();
    for (const auto& f : rep.notes) {
      if (f.kind != "counterexample" || !f.graph) continue;
      std::filesystem::create_directories(opt.counterexample_dir);
      const auto path = std::filesystem::path(opt.counterexample_dir) /
                        ("counterexample_d" + std::to_string(c.d) + "_p" + std::to_string(c.p) +
                         "_" + std::to_string(index++) + ".el");
      write_file(path.string(), serialize_edge_list(*f.graph));
      files.push_back(path.string());
    }
    run.result = to_json(rep);
    run.result["counterexampleFiles"] = std::move(files);
    run.exit_code = index > 0 ? kExitNegative : rep.passed() ? kExitOk : kExitNegative;
    return;
  } else if (s == "section6-gadgets") {
    rep = verify_section6_gadgets();
  } else if (s == "spanning-trees") {
    SpanningConfig c;
    if (opt.max_n) c.max_n = *opt.max_n;
    if (opt.count) c.count = *opt.count;
    if (opt.seed_given) c.seed = opt.seed;
    note("count", c.count);
    run.seed = c.seed;
    rep = verify_spanning_trees(c);
  } else {
    throw InputError("unknown suite " + s);
  }
  run.result = to_json(rep);
  run.exit_code = rep.passed() ? kExitOk : kExitNegative;
}

void do_export(const Options& opt, Run& run) {
  std::string text = read_file(opt.graph_file);
  Graph g = parse_edge_list(text);
  std::string out = graph_text(g, marked_edges(text), opt.format);
  if (!opt.out_file.empty()) {
    write_file(opt.out_file, out);
    run.raw_output = "";
  } else {
    run.raw_output = out;
  }
}

void add_graph(CLI::App* app, Options& opt) {
  app->add_option("--graph", opt.graph_file, "edge-list file")->required();
}

void add_timeout(CLI::App* app, Options& opt) {
  app->add_option("--timeout-ms", opt.timeout_ms,
                  "cap for exact solves (default: PACKDOM_TIMEOUT_MS or 60000)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Distance-d p-packing domination toolkit", "packdom"};
  app.set_version_flag("--version", PACKDOM_VERSION);
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "exact gamma_d^p of a graph");
  auto* tree_solve = app.add_subcommand("tree-solve", "gamma_d^p of a tree by dynamic programming");
  for (auto* sub : {solve, tree_solve}) {
    add_graph(sub, opt);
    sub->add_option("--d", opt.d, "domination distance")->required();
    sub->add_option("--p", opt.p, "packing parameter")->required();
    sub->add_option("--budget", opt.budget, "decide gamma <= budget");
  }
  solve->add_flag("--brute-force", opt.brute_force, "plain subset enumeration (n <= 20)");
  add_timeout(solve, opt);

  auto* bounds = app.add_subcommand("bounds", "bounds and family memberships of a tree");
  add_graph(bounds, opt);
  bounds->add_option("--d", opt.d, "distance for the d-dependent bounds");

  auto* construct = app.add_subcommand("construct", "constructive algorithms");
  construct->add_option("algorithm", opt.algorithm, "peel22 | thm5 | spanning | split-f2")
      ->required()
      ->check(CLI::IsMember({"peel22", "thm5", "spanning", "split-f2"}));
  add_graph(construct, opt);
  construct->add_option("--d", opt.d, "distance for thm5");
  add_timeout(construct, opt);

  auto* reduce = app.add_subcommand("reduce", "3-SAT gadget graphs");
  reduce->add_option("action", opt.reduce_action, "build-gd | build-hd | verify")
      ->required()
      ->check(CLI::IsMember({"build-gd", "build-hd", "verify"}));
  reduce->add_option("--cnf", opt.cnf_file, "DIMACS CNF file")->required();
  reduce->add_option("--d", opt.d, "distance")->required();
  reduce->add_option("--p", opt.p, "packing parameter (verify)");
  reduce->add_option("--format", opt.format, "el | dot | json")
      ->check(CLI::IsMember({"el", "dot", "json"}));
  add_timeout(reduce, opt);

  auto* generate = app.add_subcommand("generate", "graph families");
  generate
      ->add_option("family", opt.family,
                   "path | star | cycle | spider | td-spider | fig3 | gp | gp-prime | hp | "
                   "random-tree | random-graph")
      ->required();
  generate->add_option("--n", opt.n, "order (path, cycle, random), leaves (star)");
  generate->add_option("--legs", opt.legs, "spider legs");
  generate->add_option("--length", opt.length, "spider leg length");
  generate->add_option("--multiples", opt.multiples, "td-spider leg multiples m_i");
  generate->add_option("--d", opt.d, "distance (td-spider, fig3)");
  generate->add_option("--s", opt.s, "fig3 parameter s");
  generate->add_option("--p", opt.p, "gadget parameter p");
  generate->add_option("--extra", opt.extra, "extra edges (random-graph)");
  generate->add_option("--seed", opt.seed, "random seed");
  generate->add_option("--format", opt.format, "el | dot | json")
      ->check(CLI::IsMember({"el", "dot", "json"}));
  generate->add_option("--out", opt.out_file, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "canned verification suites");
  verify
      ->add_option("suite", opt.suite,
                   "dp-vs-bruteforce | thm-bounds-sweep | equality-audit | reductions-grid | "
                   "conjecture | section6-gadgets | spanning-trees")
      ->required();
  verify->add_option("--d", opt.d, "distance (conjecture, equality-audit)");
  verify->add_option("--p", opt.p, "packing parameter (conjecture)");
  verify->add_option("--count", opt.count, "number of random instances");
  verify->add_option("--max-n", opt.max_n, "largest order");
  auto* seed_opt = verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--counterexample-dir", opt.counterexample_dir,
                     "where conjecture counterexamples are written");
  add_timeout(verify, opt);

  auto* exporter = app.add_subcommand("export", "convert an edge-list file");
  add_graph(exporter, opt);
  exporter->add_option("--format", opt.format, "dot | el | json")
      ->check(CLI::IsMember({"el", "dot", "json"}));
  exporter->add_option("--out", opt.out_file, "write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  opt.seed_given = seed_opt->count() > 0;

  Run run;
  std::string command;
  const auto start = Clock::now();
  try {
    if (solve->parsed()) {
      command = "solve";
      do_solve(opt, run, false);
    } else if (tree_solve->parsed()) {
      command = "tree-solve";
      do_solve(opt, run, true);
    } else if (bounds->parsed()) {
      command = "bounds";
      do_bounds(opt, run);
    } else if (construct->parsed()) {
      command = "construct";
      do_construct(opt, run);
    } else if (reduce->parsed()) {
      command = "reduce";
      do_reduce(opt, run);
    } else if (generate->parsed()) {
      command = "generate";
      do_generate(opt, run);
    } else if (verify->parsed()) {
      command = "verify";
      do_verify(opt, run);
    } else {
      command = "export";
      do_export(opt, run);
    }
  } catch (const InputError& e) {
    err << "packdom: " << e.what() << "\n";
    return kExitInput;
  } catch (const TimeoutError& e) {
    err << "packdom: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const InternalError& e) {
    err << "packdom: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "packdom: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();

  if (run.raw_output) {
    out << *run.raw_output;
    return run.exit_code;
  }
  Json report{{"schemaVersion", kSchemaVersion}, {"command", command}, {"argv", args}};
  report["inputDigest"] = run.has_input ? Json(input_digest(run.digest_source)) : Json(nullptr);
  report["params"] = std::move(run.params);
  report["result"] = std::move(run.result);
  report["elapsedMs"] = elapsed;
  report["version"] = PACKDOM_VERSION;
  report["seed"] = run.seed ? Json(*run.seed) : Json(nullptr);
  out << report.dump(2) << "\n";
  return run.exit_code;
}

}  // namespace packdom::cli
