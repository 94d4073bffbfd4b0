#pragma once

// Test-side reference code: naive enumerations over all permutations or all
// vertex subsets, sharing nothing with the library's search code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fpf/graph.hpp"
#include "fpf/graph6.hpp"
#include "fpf/io.hpp"
#include "fpf/permutation.hpp"

namespace shapes {

using fpf::Edge;
using fpf::Graph;
using fpf::Vertex;

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edge_list(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edge_list(n, e);
}

/// Center 0, leaves 1..k.
inline Graph star(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= k; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edge_list(k + 1, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const auto off = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  return Graph::from_edge_list(a.order() + b.order(), e);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edge_list(10, e);
}

}  // namespace shapes

namespace naive {

using fpf::Graph;
using fpf::Vertex;

inline std::string data_path(const std::string& name) { return std::string(FPF_TEST_DATA) + "/" + name; }

inline std::vector<std::string> corpus_lines(int n) {
  return fpf::split_graph6_corpus(fpf::read_text_file(data_path("graphs" + std::to_string(n) + ".g6")));
}

inline std::vector<Graph> corpus(int n) {
  std::vector<Graph> out;
  for (const auto& line : corpus_lines(n)) out.push_back(fpf::parse_graph6(line));
  return out;
}

inline std::vector<std::vector<char>> matrix(const Graph& g) {
  std::vector<std::vector<char>> m(g.order(), std::vector<char>(g.order(), 0));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

inline bool preserves(const std::vector<std::vector<char>>& a, const std::vector<std::vector<char>>& b,
                      const std::vector<Vertex>& p) {
  for (std::size_t u = 0; u < p.size(); ++u) {
    for (std::size_t v = u + 1; v < p.size(); ++v) {
      if (a[u][v] != b[p[u]][p[v]]) return false;
    }
  }
  return true;
}

/// Calls f(images) for every automorphism; stops early when f returns true.
template <class F>
bool for_each_automorphism(const Graph& g, F&& f) {
  const auto m = matrix(g);
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (preserves(m, m, p) && f(p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::size_t automorphism_count(const Graph& g) {
  std::size_t count = 0;
  for_each_automorphism(g, [&](const std::vector<Vertex>&) {
    ++count;
    return false;
  });
  return count;
}

/// Color-respecting automorphism that fixes only allowed vertices, and is an
/// involution if asked.
inline bool pfpf_exists(const Graph& g, const std::vector<int>& colors, const std::vector<bool>& allowed,
                        bool involution) {
  return for_each_automorphism(g, [&](const std::vector<Vertex>& p) {
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (colors[p[v]] != colors[v]) return false;
      if (p[v] == static_cast<Vertex>(v) && !allowed[v]) return false;
      if (involution && p[p[v]] != static_cast<Vertex>(v)) return false;
    }
    return true;
  });
}

inline bool fpf_aut_exists(const Graph& g) {
  return pfpf_exists(g, std::vector<int>(g.order(), 0), std::vector<bool>(g.order(), false), false);
}

inline bool fpf_inv_exists(const Graph& g) {
  return pfpf_exists(g, std::vector<int>(g.order(), 0), std::vector<bool>(g.order(), false), true);
}

inline bool isomorphic(const Graph& g, const Graph& h, const std::vector<int>* gc = nullptr,
                       const std::vector<int>* hc = nullptr) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const auto a = matrix(g);
  const auto b = matrix(h);
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool colors_ok = true;
    if (gc && hc) {
      for (std::size_t v = 0; v < p.size() && colors_ok; ++v) colors_ok = (*gc)[v] == (*hc)[p[v]];
    }
    if (colors_ok && preserves(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool is_module_mask(const Graph& g, std::uint32_t s) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (s >> x & 1u) continue;
    int in = 0;
    int total = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (!(s >> v & 1u)) continue;
      ++total;
      if (g.adjacent(static_cast<Vertex>(x), static_cast<Vertex>(v))) ++in;
    }
    if (in != 0 && in != total) return false;
  }
  return true;
}

/// Maximal strong modules other than V, by subset enumeration.
inline std::vector<std::vector<Vertex>> maximal_strong_modules(const Graph& g) {
  const std::size_t n = g.order();
  const std::uint32_t all = (1u << n) - 1;
  std::vector<std::uint32_t> modules;
  for (std::uint32_t s = 1; s <= all; ++s) {
    if (is_module_mask(g, s)) modules.push_back(s);
  }
  std::vector<std::uint32_t> strong;
  for (auto a : modules) {
    bool ok = true;
    for (auto b : modules) {
      if ((a & b) && (a & ~b) && (b & ~a)) ok = false;
    }
    if (ok && a != all) strong.push_back(a);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto a : strong) {
    bool maximal = true;
    for (auto b : strong) {
      if (b != a && (a & b) == a) maximal = false;
    }
    if (!maximal) continue;
    std::vector<Vertex> part;
    for (std::size_t v = 0; v < n; ++v) {
      if (a >> v & 1u) part.push_back(static_cast<Vertex>(v));
    }
    out.push_back(part);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<fpf::Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edge_list(n, edges);
}

inline fpf::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return fpf::Permutation(std::move(p));
}

/// Contains an induced P4, checked over all ordered quadruples.
inline bool has_induced_p4(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        for (Vertex d = a + 1; d < n; ++d) {
          if (a == b || a == c || b == c || b == d || c == d) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) && !g.adjacent(b, d) &&
              !g.adjacent(a, d)) {
            return true;
          }
        }
  return false;
}

}  // namespace naive
