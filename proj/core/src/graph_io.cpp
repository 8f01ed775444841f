#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "packdom/errors.hpp"
#include "packdom/graph.hpp"

namespace packdom {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, int line_no, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" +
                         std::string(token) + "'",
                     line_no);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> n, m;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  RoleMap roles;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].starts_with('#')) {
      if (tokens[0] == "#" && tokens.size() >= 2 && tokens[1] == "role") {
        if (!n) throw ParseError("role line before header", line_no);
        if (tokens.size() != 4) throw ParseError("role line must be '# role <v> <tag>'", line_no);
        auto v = parse_count(tokens[2], line_no, "role vertex");
        if (v >= *n) throw ParseError("role vertex " + std::to_string(v) + " >= n", line_no);
        roles[static_cast<Vertex>(v)] = std::string(tokens[3]);
      }
      continue;
    }

    if (!n) {
      if (tokens.size() != 2) throw ParseError("header must be 'n m'", line_no);
      n = parse_count(tokens[0], line_no, "n");
      m = parse_count(tokens[1], line_no, "m");
      continue;
    }
    if (tokens.size() != 2) throw ParseError("edge line must be 'u v'", line_no);
    if (edges.size() == *m) {
      throw ParseError("more edges than the " + std::to_string(*m) + " declared", line_no);
    }
    auto u = parse_count(tokens[0], line_no, "u");
    auto v = parse_count(tokens[1], line_no, "v");
    if (u >= *n || v >= *n) {
      throw ParseError("vertex index " + std::to_string(std::max(u, v)) + " >= n = " +
                           std::to_string(*n),
                       line_no);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second),
                       line_no);
    }
    edges.push_back(e);
  }

  if (!n) throw ParseError("missing 'n m' header", 0);
  if (edges.size() != *m) {
    throw ParseError("declared " + std::to_string(*m) + " edges but found " +
                         std::to_string(edges.size()),
                     0);
  }
  return Graph::from_edges(*n, edges, std::move(roles));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (const auto& [v, tag] : g.roles()) out << "# role " << v << ' ' << tag << '\n';
  return out.str();
}

std::string export_dot(const Graph& g, std::span<const MarkedEdge> marked) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (auto tag = g.role(v)) out << " [label=\"" << *tag << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    auto it = std::find_if(marked.begin(), marked.end(), [&](const MarkedEdge& me) {
      return std::minmax(me.edge.first, me.edge.second) == std::minmax(u, v);
    });
    if (it != marked.end()) out << " [label=\"" << it->name << "\", style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace packdom
