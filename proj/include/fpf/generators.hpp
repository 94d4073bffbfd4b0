#pragma once

// Random members of the graph classes the engine handles. Every generator
// builds the graph from its class grammar on vertices 0..n-1 and then
// shuffles the labels.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "fpf/graph.hpp"
#include "fpf/permutation.hpp"

namespace fpf {

using Rng = std::mt19937_64;

struct GeneratorLimits {
  /// Joins and spider bodies are only used on blocks up to this size, which
  /// keeps the edge count linear in n. Zero means unlimited.
  std::size_t dense_block = 0;
};

namespace detail {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

/// Splits s >= 2 into between 2 and max_parts positive sizes.
inline std::vector<std::size_t> random_split(Rng& rng, std::size_t s, std::size_t max_parts) {
  const std::size_t parts = uniform(rng, 2, std::min(s, max_parts));
  std::vector<std::size_t> cuts;
  std::vector<std::size_t> pool(s - 1);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  cuts.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(s - prev);
  return sizes;
}

inline void join_blocks(std::vector<Edge>& edges, Vertex a, std::size_t as, Vertex b, std::size_t bs) {
  for (std::size_t i = 0; i < as; ++i) {
    for (std::size_t j = 0; j < bs; ++j) edges.emplace_back(a + static_cast<Vertex>(i), b + static_cast<Vertex>(j));
  }
}

inline std::vector<Edge> prufer_tree(Rng& rng, std::size_t s, Vertex first) {
  std::vector<Edge> edges;
  if (s < 2) return edges;
  if (s == 2) return {{first, first + 1}};
  std::vector<std::size_t> code(s - 2);
  for (auto& c : code) c = uniform(rng, 0, s - 1);
  std::vector<std::size_t> degree(s, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(first + static_cast<Vertex>(leaf), first + static_cast<Vertex>(c));
    --degree[leaf];
    --degree[c];
  }
  std::vector<std::size_t> last;
  for (std::size_t v = 0; v < s; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(first + static_cast<Vertex>(last[0]), first + static_cast<Vertex>(last[1]));
  return edges;
}

inline Graph shuffled(Rng& rng, std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.emplace_back(image[u], image[v]);
  return Graph::from_edge_list(n, out);
}

inline bool dense_ok(const GeneratorLimits& lim, std::size_t s) { return lim.dense_block == 0 || s <= lim.dense_block; }

enum class Grammar { cograph, tree_cograph, p4_sparse };

// Fills edges for a block of s vertices starting at `first`.
inline void grow(Rng& rng, Grammar grammar, const GeneratorLimits& lim, Vertex first, std::size_t s,
                 std::vector<Edge>& edges) {
  if (s == 1) return;
  const bool dense = dense_ok(lim, s);
  if (grammar == Grammar::tree_cograph && uniform(rng, 0, 3) == 0) {
    auto tree = prufer_tree(rng, s, first);
    if (dense && coin(rng)) {
      std::vector<char> adj(s * s, 0);
      for (auto [u, v] : tree) adj[(u - first) * s + (v - first)] = adj[(v - first) * s + (u - first)] = 1;
      for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = a + 1; b < s; ++b) {
          if (!adj[a * s + b]) edges.emplace_back(first + static_cast<Vertex>(a), first + static_cast<Vertex>(b));
        }
      }
    } else {
      edges.insert(edges.end(), tree.begin(), tree.end());
    }
    return;
  }
  if (grammar == Grammar::p4_sparse && s >= 4 && uniform(rng, 0, 2) == 0) {
    const std::size_t t = uniform(rng, 2, s / 2);
    const std::size_t head = s - 2 * t;
    if (dense_ok(lim, t + head)) {
      // Legs first, then knees, then the head block.
      const Vertex legs = first;
      const Vertex knees = first + static_cast<Vertex>(t);
      const Vertex h = knees + static_cast<Vertex>(t);
      const bool thin = t == 2 || coin(rng);
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
          if (i < j) edges.emplace_back(knees + static_cast<Vertex>(i), knees + static_cast<Vertex>(j));
          if ((i == j) == thin) edges.emplace_back(legs + static_cast<Vertex>(i), knees + static_cast<Vertex>(j));
        }
      }
      if (head > 0) {
        join_blocks(edges, knees, t, h, head);
        grow(rng, grammar, lim, h, head, edges);
      }
      return;
    }
  }
  const auto sizes = random_split(rng, s, 4);
  const bool join = dense && coin(rng);
  Vertex at = first;
  std::vector<Vertex> starts;
  for (std::size_t sz : sizes) {
    starts.push_back(at);
    grow(rng, grammar, lim, at, sz, edges);
    at += static_cast<Vertex>(sz);
  }
  if (join) {
    for (std::size_t a = 0; a < sizes.size(); ++a) {
      for (std::size_t b = a + 1; b < sizes.size(); ++b) join_blocks(edges, starts[a], sizes[a], starts[b], sizes[b]);
    }
  }
}

inline Graph from_grammar(Rng& rng, Grammar grammar, std::size_t n, const GeneratorLimits& lim) {
  if (n == 0) throw std::invalid_argument("generator: n must be positive");
  std::vector<Edge> edges;
  grow(rng, grammar, lim, 0, n, edges);
  return shuffled(rng, n, edges);
}

}  // namespace detail

inline Graph random_tree(Rng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
  return detail::shuffled(rng, n, detail::prufer_tree(rng, n, 0));
}

/// Erdos-Renyi G(n, p).
inline Graph random_gnp(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edge_list(n, edges);
}

/// Disjoint unions and joins, starting from single vertices.
inline Graph random_cograph(Rng& rng, std::size_t n, GeneratorLimits lim = {}) {
  return detail::from_grammar(rng, detail::Grammar::cograph, n, lim);
}

/// Disjoint unions and joins, starting from trees and complements of trees.
inline Graph random_tree_cograph(Rng& rng, std::size_t n, GeneratorLimits lim = {}) {
  return detail::from_grammar(rng, detail::Grammar::tree_cograph, n, lim);
}

/// Disjoint unions, joins and spiders whose head is again P4-sparse.
inline Graph random_p4_sparse(Rng& rng, std::size_t n, GeneratorLimits lim = {}) {
  return detail::from_grammar(rng, detail::Grammar::p4_sparse, n, lim);
}

/// Repeated substitution into random patterns on at most k vertices, so the
/// modular width is at most k.
inline Graph random_bounded_modular_width(Rng& rng, std::size_t n, std::size_t k) {
  if (n == 0 || k < 2) throw std::invalid_argument("random_bounded_modular_width: need n >= 1 and k >= 2");
  std::vector<Edge> edges;
  auto grow = [&](auto&& self, Vertex first, std::size_t s) -> void {
    if (s == 1) return;
    const auto sizes = detail::random_split(rng, s, k);
    std::vector<Vertex> starts;
    Vertex at = first;
    for (std::size_t sz : sizes) {
      starts.push_back(at);
      self(self, at, sz);
      at += static_cast<Vertex>(sz);
    }
    std::bernoulli_distribution edge(0.5);
    for (std::size_t a = 0; a < sizes.size(); ++a) {
      for (std::size_t b = a + 1; b < sizes.size(); ++b) {
        if (edge(rng)) detail::join_blocks(edges, starts[a], sizes[a], starts[b], sizes[b]);
      }
    }
  };
  grow(grow, 0, n);
  return detail::shuffled(rng, n, edges);
}

}  // namespace fpf
