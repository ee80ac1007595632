#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/graph.hpp"

namespace lambda_brooks {

enum class GraphFormat { dimacs, json };

namespace detail {

inline int line_of_offset(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (tok[0] == '-' || tok[0] == '+') {
    neg = tok[0] == '-';
    i = 1;
    if (tok.size() == 1) return false;
  }
  long long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
    v = v * 10 + (tok[i] - '0');
    if (v > (1LL << 40)) return false;
  }
  out = neg ? -v : v;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// DIMACS .col
//
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (1-based)
//
// Repeated edges are merged. The m of the problem line is informational;
// many published files list each edge twice.

inline Graph read_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "c") continue;
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (tag == "p") {
      if (n >= 0) throw ParseError("second problem line", lineno);
      long long nn = 0;
      long long mm = 0;
      if (toks.size() != 3 || (toks[0] != "edge" && toks[0] != "col") ||
          !detail::parse_int(toks[1], nn) || !detail::parse_int(toks[2], mm) || nn < 0 || mm < 0)
        throw ParseError("expected 'p edge <n> <m>'", lineno);
      n = static_cast<int>(nn);
    } else if (tag == "e") {
      if (n < 0) throw ParseError("edge line before problem line", lineno);
      long long a = 0;
      long long b = 0;
      if (toks.size() != 2 || !detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b))
        throw ParseError("expected 'e <u> <v>'", lineno);
      if (a < 1 || a > n || b < 1 || b > n)
        throw ParseError("vertex id out of range 1.." + std::to_string(n), lineno);
      if (a == b) throw ParseError("loop at vertex " + std::to_string(a), lineno);
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    } else {
      throw ParseError("unknown line type '" + tag + "'", lineno);
    }
  }
  if (n < 0) throw ParseError("missing problem line", 0);
  return Graph::from_edges(n, edges);
}

inline std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges())
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON: {"edges":[[u,v],...],"n":N}, 0-based, written in canonical form.

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON needs \"n\" and \"edges\"", 0);
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    throw ParseError("\"n\" must be a non-negative integer", 0);
  const int n = j["n"].get<int>();
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge must be a pair of integers", 0);
    const long long a = e[0].get<long long>();
    const long long b = e[1].get<long long>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("edge endpoint out of range 0.." + std::to_string(n - 1), 0);
    if (a == b) throw ParseError("loop at vertex " + std::to_string(a), 0);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return Graph::from_edges(n, edges);
}

/// Parses a JSON document, reporting syntax errors with a line number.
inline nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), detail::line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

inline Graph read_json_graph(std::string_view text) { return graph_from_json(parse_json_text(text)); }

inline std::string write_json_graph(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

// ---------------------------------------------------------------------------
// Format detection and file helpers

/// `.col` -> DIMACS, `.json` -> JSON; otherwise sniffs the first
/// non-blank character ('{' means JSON).
inline GraphFormat detect_format(std::string_view path, std::string_view text) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::dimacs;
  if (ends_with(".json")) return GraphFormat::json;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? GraphFormat::json : GraphFormat::dimacs;
  }
  return GraphFormat::dimacs;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::json) return read_json_graph(text);
  std::istringstream in{std::string(text)};
  return read_dimacs(in);
}

inline std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::json ? write_json_graph(g) : write_dimacs(g);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Debug export; no layout information.
inline std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace lambda_brooks
