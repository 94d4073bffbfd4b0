#pragma once

// Equitable partitions: every vertex of cell i has the same number of
// neighbors in cell j, for all i and j. The 2-cycles of a fixed-point-free
// involutive automorphism always form one with all cells of size 2, and
// every such partition comes from one.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fpf/engine.hpp"
#include "fpf/graph.hpp"

namespace fpf {

struct EquitablePartition {
  std::vector<VertexSet> cells;

  bool is_two_homogeneous() const {
    return std::all_of(cells.begin(), cells.end(), [](const VertexSet& c) { return c.size() == 2; });
  }

  friend bool operator==(const EquitablePartition&, const EquitablePartition&) = default;
};

/// Throws std::invalid_argument unless p partitions V(g) into non-empty cells.
inline bool is_equitable(const Graph& g, const EquitablePartition& p) {
  const std::size_t n = g.order();
  std::vector<int> cell_of(n, -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (p.cells[i].empty()) throw std::invalid_argument("is_equitable: empty cell");
    for (Vertex v : p.cells[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || cell_of[v] >= 0) {
        throw std::invalid_argument("is_equitable: cells overlap or leave the graph");
      }
      cell_of[v] = static_cast<int>(i);
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("is_equitable: cells do not cover V");
  // Count each vertex's neighbors per cell, touching only the cells it sees,
  // and compare with the first vertex of its cell.
  std::vector<int> count(p.cells.size(), 0);
  std::vector<int> reference(p.cells.size(), 0);
  std::vector<int> touched;
  std::vector<int> reference_touched;
  for (const auto& cell : p.cells) {
    for (std::size_t k = 0; k < cell.size(); ++k) {
      touched.clear();
      for (Vertex w : g.neighbors(cell[k])) {
        if (count[cell_of[w]]++ == 0) touched.push_back(cell_of[w]);
      }
      bool same = true;
      if (k == 0) {
        for (int j : reference_touched) reference[j] = 0;
        reference_touched = touched;
        for (int j : touched) reference[j] = count[j];
      } else {
        same = touched.size() == reference_touched.size() &&
               std::all_of(touched.begin(), touched.end(), [&](int j) { return count[j] == reference[j]; });
      }
      for (int j : touched) count[j] = 0;
      if (!same) return false;
    }
  }
  return true;
}

/// The 2-cycles of w, ordered by their smaller vertex.
inline EquitablePartition involution_to_partition(const Graph& g, const Permutation& w) {
  if (w.size() != g.order()) throw std::invalid_argument("involution_to_partition: size mismatch");
  if (!w.is_fixed_point_free() || !w.is_self_inverse()) {
    throw std::invalid_argument("involution_to_partition: not a fixed-point-free involution");
  }
  EquitablePartition p;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (static_cast<Vertex>(v) < w(static_cast<Vertex>(v))) p.cells.push_back({static_cast<Vertex>(v), w(static_cast<Vertex>(v))});
  }
  return p;
}

/// Decided through the fixed-point-free involution engine; may throw
/// UnsupportedQuotient.
inline std::optional<EquitablePartition> has_2homogeneous_equitable_partition(const Graph& g,
                                                                             const EngineOptions& options = {}) {
  if (g.order() == 0 || g.order() % 2 == 1) return std::nullopt;
  EngineOptions opts = options;
  opts.witness = true;
  const auto r = has_fpf_involution(g, opts);
  if (!r.decision) return std::nullopt;
  return involution_to_partition(g, *r.witness);
}

}  // namespace fpf
