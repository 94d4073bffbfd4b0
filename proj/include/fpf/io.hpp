#pragma once

// Text formats: edge lists ("n" then "u v" per line), per-vertex integer
// tables for colorings and masks, and partition files (one cell per line).

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fpf/errors.hpp"
#include "fpf/graph.hpp"
#include "fpf/graph6.hpp"

namespace fpf {

namespace detail {

inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    }
    if (!blank) lines.push_back(line);
  }
  return lines;
}

inline std::vector<long long> parse_ints(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("edge list: missing vertex count");
  const auto header = detail::parse_ints(lines[0]);
  if (header.size() != 1 || header[0] < 0) throw ParseError("edge list: first line must be n");
  const auto n = static_cast<std::size_t>(header[0]);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = detail::parse_ints(lines[i]);
    if (uv.size() != 2) throw ParseError("edge list: expected 'u v' on line " + std::to_string(i + 1));
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Accepts either format: an edge list starts with a decimal vertex count,
/// which can never begin a graph6 string (digits are below byte 63).
inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty graph input");
  std::string_view first = lines[0];
  while (!first.empty() && std::isspace(static_cast<unsigned char>(first.front()))) first.remove_prefix(1);
  if (!first.empty() && std::isdigit(static_cast<unsigned char>(first.front()))) return parse_edge_list(text);
  if (lines.size() != 1) throw ParseError("graph6 input must hold exactly one graph");
  return parse_graph6(lines[0]);
}

/// All graph6 strings of a corpus file, one per non-empty line.
inline std::vector<std::string> split_graph6_corpus(std::string_view text) {
  return detail::content_lines(text);
}

/// "c" per line (line index is the vertex) or "v c" per line.
inline std::vector<int> parse_vertex_table(std::string_view text, std::size_t n) {
  const auto lines = detail::content_lines(text);
  std::vector<int> values(n, 0);
  std::vector<char> set(n, 0);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto row = detail::parse_ints(lines[i]);
    long long v = 0;
    long long value = 0;
    if (row.size() == 1) {
      v = static_cast<long long>(i);
      value = row[0];
    } else if (row.size() == 2) {
      v = row[0];
      value = row[1];
    } else {
      throw ParseError("vertex table: expected 'value' or 'vertex value'");
    }
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError("vertex table: vertex out of range");
    if (set[v]) throw ParseError("vertex table: vertex listed twice");
    set[v] = 1;
    values[v] = static_cast<int>(value);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!set[v]) throw ParseError("vertex table: vertex " + std::to_string(v) + " missing");
  }
  return values;
}

inline BooleanMask parse_mask(std::string_view text, std::size_t n) {
  const auto values = parse_vertex_table(text, n);
  std::vector<bool> bits(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (values[v] != 0 && values[v] != 1) throw ParseError("mask: values must be 0 or 1");
    bits[v] = values[v] == 1;
  }
  return BooleanMask(std::move(bits));
}

/// One cell per line, vertices separated by spaces.
inline std::vector<VertexSet> parse_partition(std::string_view text) {
  std::vector<VertexSet> cells;
  for (const auto& line : detail::content_lines(text)) {
    VertexSet cell;
    for (long long v : detail::parse_ints(line)) {
      if (v < 0) throw ParseError("partition: negative vertex");
      cell.push_back(static_cast<Vertex>(v));
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fpf
