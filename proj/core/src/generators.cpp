#include "packdom/generators.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "packdom/errors.hpp"

namespace packdom {

Edge Family::edge(const std::string& name) const {
  for (const auto& m : marked) {
    if (m.name == name) return m.edge;
  }
  throw InputError("no marked edge named " + name);
}

Graph make_path(std::size_t n) {
  if (n == 0) throw InputError("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph make_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph make_spider(std::span<const std::size_t> leg_lengths) {
  if (leg_lengths.empty()) throw InputError("spider needs at least one leg");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : leg_lengths) {
    if (len == 0) throw InputError("spider legs need length >= 1");
    Vertex prev = 0;
    for (std::size_t t = 0; t < len; ++t) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, edges);
}

Graph make_spider(std::size_t legs, std::size_t leg_length) {
  std::vector<std::size_t> lengths(legs, leg_length);
  return make_spider(lengths);
}

Graph make_Td_spider(int d, std::span<const std::size_t> multiples) {
  if (d < 1) throw InputError("T_d spider needs d >= 1");
  if (multiples.size() < 2) throw InputError("T_d spider needs at least two legs");
  std::vector<std::size_t> lengths;
  for (std::size_t m : multiples) {
    lengths.push_back(static_cast<std::size_t>(d) + m * (2 * static_cast<std::size_t>(d) + 1));
  }
  return make_spider(lengths);
}

Graph make_fig3_tree(int d, int s) {
  if (d < 2 || s < 0) throw InputError("fig3 tree needs d >= 2 and s >= 0");
  const auto star = static_cast<Vertex>(d * s);
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= star; ++v) edges.emplace_back(0, v);
  Vertex next = star + 1;
  for (Vertex c = 0; c <= star; ++c) {
    for (int copy = 0; copy < s; ++copy) {
      Vertex prev = c;
      for (int t = 0; t < d; ++t) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
    }
  }
  return Graph::from_edges(next, edges);
}

namespace {

void check_gadget_p(int p) {
  if (p < 2) throw InputError("gadget needs p >= 2");
}

// Appends p pendant 2-paths hanging from `at`.
void pendant_paths(Vertex at, int p, Vertex& next, std::vector<Edge>& edges) {
  for (int t = 0; t < p; ++t) {
    edges.emplace_back(at, next);
    edges.emplace_back(next, next + 1);
    next += 2;
  }
}

}  // namespace

Family make_gp(int p) {
  check_gadget_p(p);
  const Vertex u1 = 0;
  std::vector<Edge> edges;
  Vertex next = 1;
  pendant_paths(u1, p, next, edges);
  const Vertex m = next++;
  const Vertex v1 = next++;
  edges.emplace_back(u1, m);
  edges.emplace_back(m, v1);
  for (int t = 0; t < p; ++t) edges.emplace_back(v1, next++);
  edges.emplace_back(u1, v1);
  RoleMap roles{{u1, "u1"}, {m, "m"}, {v1, "v1"}};
  return {Graph::from_edges(next, edges, roles), {{"e1", {u1, v1}}}};
}

Family make_gp_prime(int p) {
  check_gadget_p(p);
  const Vertex u2 = 0, v2 = 1, a = 2, b = 3;
  std::vector<Edge> edges{{u2, a}, {a, b}, {b, v2}, {u2, v2}};
  Vertex next = 4;
  pendant_paths(u2, p, next, edges);
  pendant_paths(v2, p, next, edges);
  RoleMap roles{{u2, "u2"}, {v2, "v2"}, {a, "a"}, {b, "b"}};
  return {Graph::from_edges(next, edges, roles), {{"e2", {u2, v2}}}};
}

Family make_hp(int p) {
  check_gadget_p(p);
  // Cycle order v1 w1 v2 w3 v3 w2.
  const Vertex v1 = 0, w1 = 1, v2 = 2, w3 = 3, v3 = 4, w2 = 5;
  std::vector<Edge> edges{{v1, w1}, {w1, v2}, {v2, w3}, {w3, v3}, {v3, w2}, {w2, v1}};
  Vertex next = 6;
  for (Vertex v : {v1, v2, v3}) pendant_paths(v, p, next, edges);
  RoleMap roles{{v1, "v1"}, {w1, "w1"}, {v2, "v2"}, {w3, "w3"}, {v3, "v3"}, {w2, "w2"}};
  return {Graph::from_edges(next, edges, roles), {{"e", {w1, v2}}}};
}

Graph tree_from_pruefer(std::span<const Vertex> code, std::size_t n) {
  if (n == 0) throw InputError("tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (code.size() != n - 2) throw InputError("Prüfer sequence must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : code) {
    if (v >= n) throw InputError("Prüfer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("tree needs n >= 1");
  if (n <= 2) return make_path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  return tree_from_pruefer(code, n);
}

Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
  Graph tree = random_tree(n, seed);
  std::vector<Edge> edges = tree.edges();
  std::vector<Edge> missing;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v)) missing.emplace_back(u, v);
    }
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::shuffle(missing.begin(), missing.end(), rng);
  missing.resize(std::min(extra, missing.size()));
  edges.insert(edges.end(), missing.begin(), missing.end());
  return Graph::from_edges(n, edges);
}

void enumerate_trees(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n == 0) throw InputError("tree needs n >= 1");
  if (n > kEnumerateMaxOrder) {
    throw InputError("enumerate_trees refuses n > " + std::to_string(kEnumerateMaxOrder));
  }
  if (n <= 2) {
    visit(make_path(n));
    return;
  }
  std::vector<Vertex> code(n - 2, 0);
  while (true) {
    visit(tree_from_pruefer(code, n));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == n - 1) code[--i] = 0;
    if (i == 0) return;
    ++code[i - 1];
  }
}

}  // namespace packdom
