#pragma once

// graph6 codec (McKay's format): N(n) followed by the upper triangle of the
// adjacency matrix, column by column, packed six bits per printable byte.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fpf/errors.hpp"
#include "fpf/graph.hpp"

namespace fpf {

inline constexpr std::size_t kGraph6MaxOrder = std::size_t{1} << 18;

namespace detail {

inline void append_graph6_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("to_graph6: graph too large");
  std::string out;
  detail::append_graph6_order(out, n);
  const std::size_t bits = n * (n ? n - 1 : 0) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  int group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    auto nb = g.neighbors(static_cast<Vertex>(j));
    auto it = nb.begin();
    for (std::size_t i = 0; i < j; ++i) {
      while (it != nb.end() && *it < static_cast<Vertex>(i)) ++it;
      const bool bit = it != nb.end() && *it == static_cast<Vertex>(i);
      group = (group << 1) | (bit ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(group + 63);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>((group << (6 - filled)) + 63);
  return out;
}

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are tolerated. Throws ParseError on malformed input.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("graph6: empty string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte outside 63..126");
  }
  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
    if (n < 63) throw ParseError("graph6: non-canonical order field");
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
    if (n < 258048) throw ParseError("graph6: non-canonical order field");
  }
  if (n > kGraph6MaxOrder) throw ParseError("graph6: more than 2^18 vertices");
  const std::uint64_t bits = n * (n ? n - 1 : 0) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw ParseError("graph6: wrong length for n = " + std::to_string(n));
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bits % 6 != 0) {
    const std::uint64_t last = value(text.size() - 1);
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

}  // namespace fpf
