#include "vtt/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "vtt/errors.hpp"

namespace vtt {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list" || name == "edges") return GraphFormat::edge_list;
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

namespace {

std::string edge_lines(const Digraph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string dot(const Digraph& g) {
  std::ostringstream os;
  if (g.is_symmetric() && g.arc_count() > 0) {
    os << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.arcs()) {
      if (u < v) os << "  " << u << " -- " << v << ";\n";
    }
  } else {
    os << "digraph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string json_text(const Digraph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.arcs()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

Digraph from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_unsigned() ||
      !j["edges"].is_array()) {
    throw ParseError("graph JSON needs {\"n\": <count>, \"edges\": [[u, v], ...]}");
  }
  DigraphBuilder b(j["n"].get<std::size_t>());
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("graph JSON edge must be a pair of vertex indices");
    }
    try {
      b.add_arc(e[0].get<Vertex>(), e[1].get<Vertex>());
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what());
    }
  }
  return std::move(b).build();
}

std::optional<std::size_t> parse_index(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Digraph from_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  bool symmetric = false;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tokens[0] == "digraph" || tokens[0] == "graph") {
      if (declared || !arcs.empty()) throw ParseError(where + ": header must come first");
      if (tokens.size() != 2) throw ParseError(where + ": header is '" + std::string(tokens[0]) + " N'");
      declared = parse_index(tokens[1]);
      if (!declared) throw ParseError(where + ": bad vertex count");
      symmetric = tokens[0] == "graph";
      continue;
    }
    if (tokens.size() != 2) throw ParseError(where + ": expected 'u v'");
    auto u = parse_index(tokens[0]);
    auto v = parse_index(tokens[1]);
    if (!u || !v) throw ParseError(where + ": vertex labels must be non-negative integers");
    arcs.emplace_back(*u, *v);
  }
  std::size_t n = 0;
  if (declared) {
    n = *declared;
  } else {
    for (auto [u, v] : arcs) n = std::max({n, u + 1, v + 1});
  }
  DigraphBuilder b(n);
  try {
    for (auto [u, v] : arcs) {
      if (symmetric) {
        b.add_edge(u, v);
      } else {
        b.add_arc(u, v);
      }
    }
  } catch (const InvalidArgument& err) {
    throw ParseError(err.what());
  }
  return std::move(b).build();
}

}  // namespace

std::string export_graph(const Digraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list:
      return edge_lines(g);
    case GraphFormat::dot:
      return dot(g);
    case GraphFormat::json:
      return json_text(g);
  }
  throw InvalidArgument("unknown graph format");
}

std::string to_graph_file(const Digraph& g) { return "digraph " + std::to_string(g.order()) + "\n" + edge_lines(g); }

Digraph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return from_json(text);
  return from_edge_list(text);
}

}  // namespace vtt
