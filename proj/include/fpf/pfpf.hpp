#pragma once

// Partially fixed-point-free automorphisms of colored graphs. A witness for
// an instance (G, c, b) is a color-preserving automorphism that fixes v only
// if b(v) = 1; in involution mode it must also be its own inverse.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpf/errors.hpp"
#include "fpf/graph.hpp"
#include "fpf/small_canon.hpp"
#include "fpf/spider.hpp"
#include "fpf/tree_canon.hpp"

namespace fpf {

enum class Mode { automorphism, involution };

struct PfpfInstance {
  Graph graph;
  VertexColoring coloring;
  BooleanMask mask;
  Mode mode = Mode::automorphism;
};

inline void check_instance(const PfpfInstance& inst) {
  const std::size_t n = inst.graph.order();
  if (n == 0) throw std::invalid_argument("pfpf: empty vertex set");
  if (inst.coloring.size() != n || inst.mask.size() != n) {
    throw std::invalid_argument("pfpf: coloring and mask must cover exactly the vertices");
  }
}

inline bool is_pfpf_witness(const PfpfInstance& inst, const Permutation& p) {
  const std::size_t n = inst.graph.order();
  if (p.size() != n || !is_automorphism(inst.graph, p) || !preserves_colors(inst.coloring, p)) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (p(static_cast<Vertex>(v)) == static_cast<Vertex>(v) && !inst.mask[v]) return false;
  }
  return inst.mode == Mode::automorphism || p.is_self_inverse();
}

namespace detail {

/// Witness images for the structureless case where only colors constrain the
/// map. In automorphism mode each class of size >= 2 is rotated and a
/// singleton must be allowed to stay. In involution mode members are paired
/// and an odd class keeps one allowed vertex fixed.
inline std::optional<std::vector<Vertex>> solve_color_classes(std::span<const int> colors,
                                                              const std::vector<bool>& allowed, Mode mode) {
  const std::size_t n = colors.size();
  std::map<int, std::vector<Vertex>> classes;
  for (std::size_t v = 0; v < n; ++v) classes[colors[v]].push_back(static_cast<Vertex>(v));
  std::vector<Vertex> image(n);
  for (auto& [color, members] : classes) {
    const std::size_t s = members.size();
    if (mode == Mode::automorphism) {
      if (s == 1) {
        if (!allowed[members[0]]) return std::nullopt;
        image[members[0]] = members[0];
        continue;
      }
      for (std::size_t i = 0; i < s; ++i) image[members[i]] = members[(i + 1) % s];
      continue;
    }
    if (s % 2 == 1) {
      auto keep = std::find_if(members.begin(), members.end(), [&](Vertex v) { return allowed[v]; });
      if (keep == members.end()) return std::nullopt;
      image[*keep] = *keep;
      members.erase(keep);
    }
    for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
      image[members[i]] = members[i + 1];
      image[members[i + 1]] = members[i];
    }
  }
  return image;
}

inline std::vector<bool> mask_bits(const BooleanMask& mask) {
  std::vector<bool> bits(mask.size());
  for (std::size_t v = 0; v < mask.size(); ++v) bits[v] = mask[v];
  return bits;
}

/// PFPF on a colored tree hung from one root or from the two halves of a
/// bicentered tree. Subtrees with equal names are isomorphic as colored
/// rooted trees, and their canonical preorders align them.
class RootedTreeSolver {
 public:
  RootedTreeSolver(const Graph& t, std::span<const int> colors, const BooleanMask& mask, Mode mode,
                   std::span<const Vertex> roots)
      : mask_(mask), mode_(mode) {
    rt_ = root_tree(t, roots);
    name_subtrees(rt_, colors);
    sort_children_by_name(rt_);
    solvable_.assign(t.order(), false);
    for (auto it = rt_.bfs_order.rbegin(); it != rt_.bfs_order.rend(); ++it) {
      solvable_[*it] = mask_[*it] && children_solution(*it).has_value();
    }
  }

  const RootedTree& rooting() const noexcept { return rt_; }
  bool solvable(Vertex v) const { return solvable_[v]; }

  /// Writes a witness for the subtree of v into image, fixing v.
  void fix(Vertex v, std::vector<Vertex>& image) const {
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      image[u] = u;
      const auto& kids = rt_.children[u];
      const auto sigma = *children_solution(u);
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (sigma[i] == static_cast<Vertex>(i)) {
          stack.push_back(kids[i]);
        } else {
          move(kids[i], kids[sigma[i]], image);
        }
      }
    }
  }

  /// Maps the subtree of a onto the equally named subtree of b.
  void move(Vertex a, Vertex b, std::vector<Vertex>& image) const {
    const auto from = subtree_preorder(a);
    const auto to = subtree_preorder(b);
    for (std::size_t i = 0; i < from.size(); ++i) image[from[i]] = to[i];
  }

 private:
  std::optional<std::vector<Vertex>> children_solution(Vertex v) const {
    const auto& kids = rt_.children[v];
    std::vector<int> colors(kids.size());
    std::vector<bool> allowed(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      colors[i] = rt_.name[kids[i]];
      allowed[i] = solvable_[kids[i]];
    }
    return solve_color_classes(colors, allowed, mode_);
  }

  std::vector<Vertex> subtree_preorder(Vertex v) const {
    std::vector<Vertex> order;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (auto it = rt_.children[u].rbegin(); it != rt_.children[u].rend(); ++it) stack.push_back(*it);
    }
    return order;
  }

  const BooleanMask& mask_;
  Mode mode_;
  RootedTree rt_;
  std::vector<bool> solvable_;
};

}  // namespace detail

/// Complete or edgeless graphs: only the colors constrain the map.
inline std::optional<Permutation> pfpf_complete_or_empty(const PfpfInstance& inst) {
  check_instance(inst);
  if (!inst.graph.is_complete() && !inst.graph.is_edgeless()) {
    throw std::invalid_argument("pfpf_complete_or_empty: graph is neither complete nor edgeless");
  }
  auto image = detail::solve_color_classes(inst.coloring.values(), detail::mask_bits(inst.mask), inst.mode);
  if (!image) return std::nullopt;
  return Permutation(std::move(*image));
}

/// Colored trees. With a root, the root must stay fixed and is required to
/// be allowed. Without one, a unique center stays fixed; two centers either
/// swap their isomorphic halves or both stay fixed.
inline std::optional<Permutation> pfpf_tree(const PfpfInstance& inst, std::optional<Vertex> root = std::nullopt) {
  check_instance(inst);
  const Graph& t = inst.graph;
  if (!detail::is_tree(t)) throw std::invalid_argument("pfpf_tree: graph is not a tree");
  const std::size_t n = t.order();
  if (root && (*root < 0 || static_cast<std::size_t>(*root) >= n)) {
    throw std::out_of_range("pfpf_tree: root out of range");
  }
  const auto colors = inst.coloring.values();
  std::vector<Vertex> roots = root ? std::vector<Vertex>{*root} : detail::tree_centers(t);
  detail::RootedTreeSolver solver(t, colors, inst.mask, inst.mode, roots);
  std::vector<Vertex> image(n, -1);
  if (roots.size() == 1) {
    if (!solver.solvable(roots[0])) return std::nullopt;
    solver.fix(roots[0], image);
    return Permutation(std::move(image));
  }
  const Vertex r1 = roots[0];
  const Vertex r2 = roots[1];
  const auto& name = solver.rooting().name;
  if (name[r1] == name[r2]) {
    solver.move(r1, r2, image);
    solver.move(r2, r1, image);
    return Permutation(std::move(image));
  }
  if (solver.solvable(r1) && solver.solvable(r2)) {
    solver.fix(r1, image);
    solver.fix(r2, image);
    return Permutation(std::move(image));
  }
  return std::nullopt;
}

/// Graphs whose complement is a tree; automorphisms are shared with the
/// complement.
inline std::optional<Permutation> pfpf_co_tree(const PfpfInstance& inst) {
  check_instance(inst);
  PfpfInstance flipped{complement(inst.graph), inst.coloring, inst.mask, inst.mode};
  if (!detail::is_tree(flipped.graph)) throw std::invalid_argument("pfpf_co_tree: complement is not a tree");
  return pfpf_tree(flipped);
}

/// Spiders: a witness permutes the (leg, knee) pairs as units and fixes the
/// head, so the problem reduces to the body clique colored by pair colors.
inline std::optional<Permutation> pfpf_spider(const PfpfInstance& inst, const SpiderDecomposition& sd) {
  check_instance(inst);
  if (!is_valid_spider(inst.graph, sd)) throw std::invalid_argument("pfpf_spider: decomposition does not fit the graph");
  for (Vertex h : sd.head) {
    if (!inst.mask[h]) return std::nullopt;
  }
  const std::size_t t = sd.knees.size();
  std::map<std::pair<int, int>, int> pair_color;
  std::vector<int> colors(t);
  std::vector<bool> allowed(t);
  for (std::size_t i = 0; i < t; ++i) {
    const std::pair key{inst.coloring[sd.knees[i]], inst.coloring[sd.legs[i]]};
    colors[i] = pair_color.emplace(key, static_cast<int>(pair_color.size())).first->second;
    allowed[i] = inst.mask[sd.knees[i]] && inst.mask[sd.legs[i]];
  }
  const auto sigma = detail::solve_color_classes(colors, allowed, inst.mode);
  if (!sigma) return std::nullopt;
  std::vector<Vertex> image(inst.graph.order());
  for (Vertex h : sd.head) image[h] = h;
  for (std::size_t i = 0; i < t; ++i) {
    image[sd.knees[i]] = sd.knees[(*sigma)[i]];
    image[sd.legs[i]] = sd.legs[(*sigma)[i]];
  }
  return Permutation(std::move(image));
}

/// Exhaustive search; returns the witness with the lexicographically
/// smallest image sequence.
inline std::optional<Permutation> pfpf_bruteforce(const PfpfInstance& inst, std::size_t cap = kDefaultBruteForceCap) {
  check_instance(inst);
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  if (n > cap) throw CapExceeded("pfpf_bruteforce", n, cap);
  const auto adj = detail::adjacency_matrix(g);
  const bool involution = inst.mode == Mode::involution;
  std::vector<Vertex> image(n, -1);
  std::vector<Vertex> preimage(n, -1);
  auto extend = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (preimage[w] >= 0 || inst.coloring[w] != inst.coloring[v]) continue;
      if (g.degree(static_cast<Vertex>(w)) != g.degree(static_cast<Vertex>(v))) continue;
      if (w == v && !inst.mask[v]) continue;
      // In involution mode an earlier vertex that was sent to v pins v's image.
      if (involution && w < v && image[w] != static_cast<Vertex>(v)) continue;
      if (involution && w > v && preimage[v] >= 0) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = adj[v * n + u] == adj[w * n + image[u]];
      if (!ok) continue;
      image[v] = static_cast<Vertex>(w);
      preimage[w] = static_cast<Vertex>(v);
      if (self(self, v + 1)) return true;
      preimage[w] = -1;
      image[v] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return Permutation(std::move(image));
}

}  // namespace fpf
