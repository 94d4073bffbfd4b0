#pragma once

// Exhaustive reference answers for small graphs. Nothing here touches the
// decomposition code; the search only uses adjacency, distances and color
// refinement, all of which every automorphism preserves.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fpf/errors.hpp"
#include "fpf/graph.hpp"
#include "fpf/pfpf.hpp"

namespace fpf {

inline constexpr std::size_t kDefaultOracleCap = 9;

namespace detail {

struct OracleQuery {
  std::vector<int> colors;
  /// Vertices that may be fixed.
  std::vector<bool> may_fix;
  bool involution = false;
  /// Forbid v <-> w swaps along an edge.
  bool partners_nonadjacent = false;
  bool nonidentity = false;
};

class OracleSearch {
 public:
  OracleSearch(const Graph& g, OracleQuery q) : g_(g), q_(std::move(q)), n_(g.order()) {
    dist_.assign(n_ * n_, -1);
    for (std::size_t s = 0; s < n_; ++s) {
      std::vector<Vertex> queue{static_cast<Vertex>(s)};
      dist_[s * n_ + s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Vertex w : g.neighbors(v)) {
          if (dist_[s * n_ + w] < 0) {
            dist_[s * n_ + w] = dist_[s * n_ + v] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    refine();
  }

  std::optional<Permutation> first() {
    image_.assign(n_, -1);
    preimage_.assign(n_, -1);
    if (!extend(0)) return std::nullopt;
    return Permutation(image_);
  }

 private:
  // Stable coloring: start from (color, degree) and split by the multiset of
  // neighbor cells until nothing changes.
  void refine() {
    cell_.assign(n_, 0);
    std::map<std::pair<int, std::size_t>, int> start;
    for (std::size_t v = 0; v < n_; ++v) start[{q_.colors[v], g_.degree(static_cast<Vertex>(v))}] = 0;
    int next = 0;
    for (auto& [key, id] : start) id = next++;
    for (std::size_t v = 0; v < n_; ++v) cell_[v] = start[{q_.colors[v], g_.degree(static_cast<Vertex>(v))}];
    std::size_t cells = start.size();
    for (;;) {
      std::map<std::vector<int>, int> sigs;
      std::vector<std::vector<int>> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        sig[v].push_back(cell_[v]);
        for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) sig[v].push_back(cell_[w]);
        std::sort(sig[v].begin() + 1, sig[v].end());
        sigs[sig[v]] = 0;
      }
      if (sigs.size() == cells) return;
      cells = sigs.size();
      next = 0;
      for (auto& [key, id] : sigs) id = next++;
      for (std::size_t v = 0; v < n_; ++v) cell_[v] = sigs[sig[v]];
    }
  }

  bool consistent(std::size_t v, std::size_t w) const {
    for (std::size_t u = 0; u < n_; ++u) {
      if (image_[u] < 0) continue;
      if (dist_[v * n_ + u] != dist_[w * n_ + image_[u]]) return false;
    }
    return true;
  }

  bool extend(std::size_t v) {
    if (v == n_) {
      if (!q_.nonidentity) return true;
      for (std::size_t u = 0; u < n_; ++u) {
        if (image_[u] != static_cast<Vertex>(u)) return true;
      }
      return false;
    }
    if (image_[v] >= 0) return extend(v + 1);
    for (std::size_t w = 0; w < n_; ++w) {
      if (preimage_[w] >= 0 || cell_[w] != cell_[v]) continue;
      if (w == v && !q_.may_fix[v]) continue;
      if (q_.involution) {
        // v's partner w must itself be free so it can be sent back to v.
        if (w != v && (image_[w] >= 0 || preimage_[v] >= 0)) continue;
        if (w != v && q_.partners_nonadjacent && g_.adjacent(static_cast<Vertex>(v), static_cast<Vertex>(w))) continue;
      }
      if (!consistent(v, w)) continue;
      image_[v] = static_cast<Vertex>(w);
      preimage_[w] = static_cast<Vertex>(v);
      bool paired = false;
      if (q_.involution && w != v) {
        if (consistent(w, v)) {
          image_[w] = static_cast<Vertex>(v);
          preimage_[v] = static_cast<Vertex>(w);
          paired = true;
        } else {
          image_[v] = -1;
          preimage_[w] = -1;
          continue;
        }
      }
      if (extend(v + 1)) return true;
      if (paired) {
        image_[w] = -1;
        preimage_[v] = -1;
      }
      image_[v] = -1;
      preimage_[w] = -1;
    }
    return false;
  }

  const Graph& g_;
  OracleQuery q_;
  std::size_t n_;
  std::vector<int> dist_;
  std::vector<int> cell_;
  std::vector<Vertex> image_;
  std::vector<Vertex> preimage_;
};

inline void check_oracle_cap(const char* what, std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(what, n, cap);
}

}  // namespace detail

/// Lexicographically first fixed-point-free automorphism.
inline std::optional<Permutation> oracle_fpf_aut(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  detail::check_oracle_cap("oracle_fpf_aut", g.order(), cap);
  if (g.order() == 0) return std::nullopt;
  detail::OracleQuery q{std::vector<int>(g.order(), 0), std::vector<bool>(g.order(), false)};
  return detail::OracleSearch(g, std::move(q)).first();
}

/// Lexicographically first fixed-point-free involution, searched as a
/// perfect matching of the vertices.
inline std::optional<Permutation> oracle_fpf_inv(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  detail::check_oracle_cap("oracle_fpf_inv", g.order(), cap);
  if (g.order() == 0 || g.order() % 2 == 1) return std::nullopt;
  detail::OracleQuery q{std::vector<int>(g.order(), 0), std::vector<bool>(g.order(), false), true};
  return detail::OracleSearch(g, std::move(q)).first();
}

inline std::optional<Permutation> oracle_pfpf(const PfpfInstance& inst, std::size_t cap = kDefaultOracleCap) {
  check_instance(inst);
  detail::check_oracle_cap("oracle_pfpf", inst.graph.order(), cap);
  detail::OracleQuery q;
  const auto colors = inst.coloring.values();
  q.colors.assign(colors.begin(), colors.end());
  for (std::size_t v = 0; v < inst.mask.size(); ++v) q.may_fix.push_back(inst.mask[v]);
  q.involution = inst.mode == Mode::involution;
  return detail::OracleSearch(inst.graph, std::move(q)).first();
}

/// An involutive automorphism that swaps no edge. By default it must also
/// be fixed-point free; `allow_fixed_vertices` drops that and asks for a
/// non-identity map instead.
inline std::optional<Permutation> oracle_fixed_edge_free_inv(const Graph& g, bool allow_fixed_vertices = false,
                                                             std::size_t cap = kDefaultOracleCap) {
  detail::check_oracle_cap("oracle_fixed_edge_free_inv", g.order(), cap);
  const std::size_t n = g.order();
  if (n == 0 || (!allow_fixed_vertices && n % 2 == 1)) return std::nullopt;
  detail::OracleQuery q{std::vector<int>(n, 0), std::vector<bool>(n, allow_fixed_vertices), true, true,
                        allow_fixed_vertices};
  return detail::OracleSearch(g, std::move(q)).first();
}

struct ModuleInfo {
  VertexSet vertices;
  /// Overlaps no other module.
  bool strong = false;
};

inline constexpr std::size_t kOracleModulesCap = 12;

/// Every module of g, trivial ones included, in increasing bitmask order.
inline std::vector<ModuleInfo> oracle_modules(const Graph& g) {
  const std::size_t n = g.order();
  detail::check_oracle_cap("oracle_modules", n, kOracleModulesCap);
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::vector<std::uint32_t> modules;
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((1ull << n) - 1);
  for (std::uint32_t s = 1; s <= all && s != 0; ++s) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (s >> x & 1u) continue;
      const std::uint32_t seen = adj[x] & s;
      ok = seen == 0 || seen == s;
    }
    if (ok) modules.push_back(s);
  }
  std::vector<ModuleInfo> out;
  for (std::uint32_t a : modules) {
    ModuleInfo info;
    for (std::size_t v = 0; v < n; ++v) {
      if (a >> v & 1u) info.vertices.push_back(static_cast<Vertex>(v));
    }
    info.strong = std::none_of(modules.begin(), modules.end(), [a](std::uint32_t b) {
      return (a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0;
    });
    out.push_back(std::move(info));
  }
  return out;
}

/// Brute force over perfect matchings of V for one whose pairs form an
/// equitable partition. Cells come out ordered by their smaller vertex.
inline std::optional<std::vector<VertexSet>> oracle_2homogeneous_equitable_partition(
    const Graph& g, std::size_t cap = kDefaultOracleCap) {
  const std::size_t n = g.order();
  detail::check_oracle_cap("oracle_2homogeneous_equitable_partition", n, cap);
  if (n == 0 || n % 2 == 1) return std::nullopt;
  std::vector<int> cell_of(n, -1);
  std::vector<VertexSet> cells;
  auto equitable = [&]() {
    std::vector<int> count(cells.size());
    std::vector<int> first(cells.size());
    for (const auto& cell : cells) {
      for (std::size_t k = 0; k < cell.size(); ++k) {
        std::fill(count.begin(), count.end(), 0);
        for (Vertex w : g.neighbors(cell[k])) ++count[cell_of[w]];
        if (k == 0) {
          first = count;
        } else if (count != first) {
          return false;
        }
      }
    }
    return true;
  };
  auto pair_up = [&](auto&& self) -> bool {
    std::size_t u = 0;
    while (u < n && cell_of[u] >= 0) ++u;
    if (u == n) return equitable();
    for (std::size_t w = u + 1; w < n; ++w) {
      if (cell_of[w] >= 0) continue;
      cell_of[u] = cell_of[w] = static_cast<int>(cells.size());
      cells.push_back({static_cast<Vertex>(u), static_cast<Vertex>(w)});
      if (self(self)) return true;
      cells.pop_back();
      cell_of[u] = cell_of[w] = -1;
    }
    return false;
  };
  if (!pair_up(pair_up)) return std::nullopt;
  return cells;
}

}  // namespace fpf
