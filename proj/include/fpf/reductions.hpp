#pragma once

// Graph transformations that keep the answer to "is there a fixed-point-free
// automorphism (involution)?" unchanged. Each returns the new graph and the
// name of every new vertex in terms of the input.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpf/graph.hpp"

namespace fpf {

struct VertexName {
  enum class Kind { original, edge_copy, path_point };
  Kind kind = Kind::original;
  /// original: u is the vertex. edge_copy: copy i of edge {u, v}, u < v.
  /// path_point: the vertex at distance d from u on the path that replaced
  /// the edge from u towards v (towards copy i of {u, v} in full_reduction).
  Vertex u = 0;
  Vertex v = -1;
  int i = 0;
  int d = 0;

  static VertexName original(Vertex x) { return {Kind::original, x, -1, 0, 0}; }
  static VertexName edge_copy(Vertex a, Vertex b, int copy) { return {Kind::edge_copy, a, b, copy, 0}; }
  static VertexName path_point(Vertex a, Vertex b, int copy, int dist) { return {Kind::path_point, a, b, copy, dist}; }

  friend bool operator==(const VertexName&, const VertexName&) = default;
};

struct Reduction {
  Graph graph;
  /// names[id] describes vertex id of graph.
  std::vector<VertexName> names;
};

namespace detail {

inline Reduction edge_copies(const Graph& g, bool originals_form_clique) {
  const std::size_t n = g.order();
  const auto edges = g.edges();
  std::vector<Edge> out;
  Reduction r;
  for (std::size_t v = 0; v < n; ++v) r.names.push_back(VertexName::original(static_cast<Vertex>(v)));
  if (originals_form_clique) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  for (auto [a, b] : edges) {
    for (int copy = 1; copy <= 2; ++copy) {
      const auto id = static_cast<Vertex>(r.names.size());
      r.names.push_back(VertexName::edge_copy(a, b, copy));
      out.emplace_back(a, id);
      out.emplace_back(b, id);
    }
  }
  r.graph = Graph::from_edge_list(r.names.size(), out);
  return r;
}

}  // namespace detail

/// Originals become a clique, and each edge {u, v} gets two independent
/// copies adjacent to exactly u and v. The result is a split graph.
inline Reduction split_construction(const Graph& g) { return detail::edge_copies(g, true); }

/// As split_construction with the originals independent. The result is
/// bipartite with sides V and the edge copies. Requires g connected with at
/// least 3 vertices.
inline Reduction bipartite_construction(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("bipartite_construction: needs at least 3 vertices");
  if (connected_components(g).size() != 1) throw std::invalid_argument("bipartite_construction: graph is disconnected");
  return detail::edge_copies(g, false);
}

/// Every edge {u, v}, u < v, becomes a path u, p_1, ..., p_k, v. Path
/// points follow the originals, by sorted edge and then distance from u.
inline Reduction k_subdivision(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k_subdivision: k must be at least 1");
  const std::size_t n = g.order();
  Reduction r;
  for (std::size_t v = 0; v < n; ++v) r.names.push_back(VertexName::original(static_cast<Vertex>(v)));
  std::vector<Edge> out;
  for (auto [a, b] : g.edges()) {
    Vertex prev = a;
    for (int d = 1; d <= k; ++d) {
      const auto id = static_cast<Vertex>(r.names.size());
      r.names.push_back(VertexName::path_point(a, b, 0, d));
      out.emplace_back(prev, id);
      prev = id;
    }
    out.emplace_back(prev, b);
  }
  r.graph = Graph::from_edge_list(r.names.size(), out);
  return r;
}

/// k_subdivision(bipartite_construction(g), k), with path points named after
/// the original endpoint and the edge copy they lead to.
inline Reduction full_reduction(const Graph& g, int k) {
  const Reduction mid = bipartite_construction(g);
  Reduction r = k_subdivision(mid.graph, k);
  for (auto& name : r.names) {
    if (name.kind == VertexName::Kind::original) {
      name = mid.names[name.u];
      continue;
    }
    // Every edge of the bipartite graph joins an original (smaller id) to a copy.
    const VertexName& copy = mid.names[name.v];
    const Vertex from = name.u;
    const Vertex other = copy.u == from ? copy.v : copy.u;
    name = VertexName::path_point(from, other, copy.i, name.d);
  }
  return r;
}

/// "id original v", "id edge_copy u v i" or "id path_point u v i d" per line.
inline std::string names_to_text(const std::vector<VertexName>& names) {
  std::string out;
  for (std::size_t id = 0; id < names.size(); ++id) {
    const auto& nm = names[id];
    out += std::to_string(id);
    switch (nm.kind) {
      case VertexName::Kind::original:
        out += " original " + std::to_string(nm.u);
        break;
      case VertexName::Kind::edge_copy:
        out += " edge_copy " + std::to_string(nm.u) + ' ' + std::to_string(nm.v) + ' ' + std::to_string(nm.i);
        break;
      case VertexName::Kind::path_point:
        out += " path_point " + std::to_string(nm.u) + ' ' + std::to_string(nm.v) + ' ' + std::to_string(nm.i) + ' ' +
               std::to_string(nm.d);
        break;
    }
    out += '\n';
  }
  return out;
}

/// The restriction of a witness on a reduced graph to the original vertices,
/// or absent if it does not map originals to originals.
inline std::optional<Permutation> pull_back(const Permutation& w, const std::vector<VertexName>& names) {
  std::vector<Vertex> original_id(names.size(), -1);
  std::size_t n = 0;
  for (std::size_t id = 0; id < names.size(); ++id) {
    if (names[id].kind == VertexName::Kind::original) {
      original_id[id] = names[id].u;
      ++n;
    }
  }
  std::vector<Vertex> image(n, -1);
  for (std::size_t id = 0; id < names.size(); ++id) {
    if (original_id[id] < 0) continue;
    const Vertex to = original_id[w(static_cast<Vertex>(id))];
    if (to < 0) return std::nullopt;
    image[original_id[id]] = to;
  }
  return Permutation(std::move(image));
}

}  // namespace fpf
