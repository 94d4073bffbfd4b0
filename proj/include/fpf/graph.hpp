#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpf/permutation.hpp"

namespace fpf {

using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, stored as sorted
/// adjacency lists in compressed (CSR) form.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an edge list. Duplicate pairs are merged; self-loops
  /// and endpoints >= n throw std::invalid_argument.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) {
    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : pairs) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
          static_cast<std::size_t>(v) >= n) {
        throw std::invalid_argument("from_edge_list: endpoint out of range");
      }
      if (u == v) throw std::invalid_argument("from_edge_list: self-loop");
      ++degree[u];
      ++degree[v];
    }
    std::vector<std::vector<Vertex>> lists(n);
    for (std::size_t v = 0; v < n; ++v) lists[v].reserve(degree[v]);
    for (auto [u, v] : pairs) {
      lists[u].push_back(v);
      lists[v].push_back(u);
    }
    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      auto& l = lists[v];
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
      g.offsets_[v + 1] = g.offsets_[v] + l.size();
    }
    g.adj_.reserve(g.offsets_[n]);
    for (auto& l : lists) g.adj_.insert(g.adj_.end(), l.begin(), l.end());
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  /// Trusted construction from CSR arrays whose rows are already sorted,
  /// duplicate-free, loop-free and symmetric. Used by internal builders.
  static Graph from_sorted_csr(std::vector<std::size_t> offsets,
                               std::vector<Vertex> targets) {
    Graph g;
    g.offsets_ = std::move(offsets);
    g.adj_ = std::move(targets);
    return g;
  }

  static Graph empty(std::size_t n) {
    Graph g;
    g.offsets_.assign(n + 1, 0);
    return g;
  }

  static Graph complete(std::size_t n) {
    std::vector<std::size_t> offsets(n + 1, 0);
    std::vector<Vertex> targets;
    targets.reserve(n * (n ? n - 1 : 0));
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (u != v) targets.push_back(static_cast<Vertex>(u));
      }
      offsets[v + 1] = targets.size();
    }
    return from_sorted_csr(std::move(offsets), std::move(targets));
  }

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t size() const noexcept { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t u = 0; u < order(); ++u) {
      for (Vertex v : neighbors(static_cast<Vertex>(u))) {
        if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
      }
    }
    return out;
  }

  bool is_complete() const {
    const std::size_t n = order();
    return 2 * size() == n * (n ? n - 1 : 0);
  }
  bool is_edgeless() const { return adj_.empty(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

/// Graph on the same vertices whose edges are exactly the non-edges of g.
inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Vertex> targets;
  targets.reserve(n * (n ? n - 1 : 0) - 2 * g.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    auto it = nb.begin();
    for (std::size_t u = 0; u < n; ++u) {
      if (it != nb.end() && *it == static_cast<Vertex>(u)) {
        ++it;
        continue;
      }
      if (u != v) targets.push_back(static_cast<Vertex>(u));
    }
    offsets[v + 1] = targets.size();
  }
  return Graph::from_sorted_csr(std::move(offsets), std::move(targets));
}

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the vertex of the parent graph behind new vertex i.
  std::vector<Vertex> to_original;
};

namespace detail {

/// Induced subgraph on `part`, which must be sorted ascending. `scratch` must
/// have g.order() entries equal to -1; it is restored before returning.
inline Graph induced_sorted(const Graph& g, std::span<const Vertex> part,
                            std::vector<Vertex>& scratch) {
  for (std::size_t i = 0; i < part.size(); ++i) scratch[part[i]] = static_cast<Vertex>(i);
  std::vector<std::size_t> offsets(part.size() + 1, 0);
  std::vector<Vertex> targets;
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (Vertex w : g.neighbors(part[i])) {
      if (scratch[w] >= 0) targets.push_back(scratch[w]);
    }
    offsets[i + 1] = targets.size();
  }
  for (Vertex v : part) scratch[v] = -1;
  return Graph::from_sorted_csr(std::move(offsets), std::move(targets));
}

}  // namespace detail

/// G[s]. The vertex order of the result follows the ascending order of s.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  }
  for (Vertex v : sorted) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      throw std::invalid_argument("induced_subgraph: vertex not in graph");
    }
  }
  std::vector<Vertex> scratch(g.order(), -1);
  Graph sub = detail::induced_sorted(g, sorted, scratch);
  return {std::move(sub), std::move(sorted)};
}

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> parts;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    parts.push_back(std::move(comp));
  }
  return parts;
}

/// Connected components of the complement, computed without materializing
/// it: O(n + m) by walking a list of unvisited vertices.
inline std::vector<VertexSet> co_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> unvisited(n);
  for (std::size_t v = 0; v < n; ++v) unvisited[v] = static_cast<Vertex>(v);
  std::vector<char> mark(n, 0);
  std::vector<VertexSet> parts;
  std::vector<Vertex> stack;
  std::vector<Vertex> keep;
  while (!unvisited.empty()) {
    Vertex s = unvisited.back();
    unvisited.pop_back();
    VertexSet comp{s};
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) mark[w] = 1;
      keep.clear();
      for (Vertex w : unvisited) {
        if (mark[w]) {
          keep.push_back(w);
        } else {
          comp.push_back(w);
          stack.push_back(w);
        }
      }
      for (Vertex w : g.neighbors(v)) mark[w] = 0;
      unvisited.swap(keep);
    }
    std::sort(comp.begin(), comp.end());
    parts.push_back(std::move(comp));
  }
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return parts;
}

inline constexpr int kUnreachable = -1;

/// Shortest-path edge counts from source; kUnreachable elsewhere.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || static_cast<std::size_t>(source) >= g.order()) {
    throw std::invalid_argument("bfs_distances: source not in graph");
  }
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// The graph with every edge {u, v} replaced by {p(u), p(v)}.
inline Graph relabel(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  return Graph::from_edge_list(g.order(), edges);
}

/// True iff `map` is a bijection V(g) -> V(h) preserving edges and non-edges.
inline bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& map) {
  if (g.order() != h.order() || g.size() != h.size() || map.size() != g.order()) {
    return false;
  }
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (g.degree(static_cast<Vertex>(u)) != h.degree(map(static_cast<Vertex>(u)))) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(map(u), map(v))) return false;
  }
  return true;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  return is_isomorphism(g, g, p);
}

/// Per-vertex color ids, normalized to the contiguous range 0..k-1.
class VertexColoring {
 public:
  VertexColoring() = default;

  /// Normalizes arbitrary integer labels, preserving their relative order.
  explicit VertexColoring(std::span<const int> raw) : colors_(raw.begin(), raw.end()) {
    std::vector<int> distinct(raw.begin(), raw.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& c : colors_) {
      c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
    }
    num_colors_ = distinct.size();
  }
  explicit VertexColoring(const std::vector<int>& raw)
      : VertexColoring(std::span<const int>(raw)) {}

  static VertexColoring uniform(std::size_t n) {
    return VertexColoring(std::vector<int>(n, 0));
  }

  std::size_t size() const noexcept { return colors_.size(); }
  std::size_t num_colors() const noexcept { return num_colors_; }
  int operator[](Vertex v) const { return colors_[v]; }
  std::span<const int> values() const noexcept { return colors_; }

  /// Vertices grouped by color id; each class is sorted.
  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(num_colors_);
    for (std::size_t v = 0; v < colors_.size(); ++v) out[colors_[v]].push_back(static_cast<Vertex>(v));
    return out;
  }

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

 private:
  std::vector<int> colors_;
  std::size_t num_colors_ = 0;
};

/// Per-vertex permission to be a fixed point.
class BooleanMask {
 public:
  BooleanMask() = default;
  explicit BooleanMask(std::vector<bool> bits) : bits_(std::move(bits)) {}
  static BooleanMask all(std::size_t n, bool value) { return BooleanMask(std::vector<bool>(n, value)); }

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](Vertex v) const { return bits_[v]; }

  friend bool operator==(const BooleanMask&, const BooleanMask&) = default;

 private:
  std::vector<bool> bits_;
};

inline bool preserves_colors(const VertexColoring& c, const Permutation& p) {
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (c[static_cast<Vertex>(v)] != c[p(static_cast<Vertex>(v))]) return false;
  }
  return true;
}

}  // namespace fpf
