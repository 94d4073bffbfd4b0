#pragma once

// Colored tree canonization by level-wise subtree naming.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpf/canonical_form.hpp"
#include "fpf/graph.hpp"

namespace fpf {

namespace detail {

inline bool is_tree(const Graph& g) {
  if (g.order() == 0 || g.size() + 1 != g.order()) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

/// One or two centers, by repeatedly stripping leaves.
inline std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (std::size_t v = 0; v < n; ++v) all.push_back(static_cast<Vertex>(v));
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = t.degree(static_cast<Vertex>(v));
    if (deg[v] == 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// A tree hung from one root, or from two adjacent roots with the edge
/// between them cut. name[v] identifies the colored rooted subtree at v up
/// to isomorphism; names are comparable across trees named in one pass.
struct RootedTree {
  std::vector<Vertex> roots;
  std::vector<Vertex> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> bfs_order;
  std::vector<int> name;
};

inline RootedTree root_tree(const Graph& t, std::span<const Vertex> roots) {
  const std::size_t n = t.order();
  RootedTree rt;
  rt.roots.assign(roots.begin(), roots.end());
  rt.parent.assign(n, -1);
  rt.children.assign(n, {});
  std::vector<char> seen(n, 0);
  for (Vertex r : roots) {
    seen[r] = 1;
    rt.bfs_order.push_back(r);
  }
  for (std::size_t head = 0; head < rt.bfs_order.size(); ++head) {
    const Vertex v = rt.bfs_order[head];
    for (Vertex w : t.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      rt.parent[w] = v;
      rt.children[v].push_back(w);
      rt.bfs_order.push_back(w);
    }
  }
  return rt;
}

/// Names subtrees bottom-up by height. Within a height, names are ranks of
/// the sorted (color, sorted child names) tuples, offset past lower heights,
/// so they depend only on the isomorphism classes present.
inline void name_subtrees(RootedTree& rt, std::span<const int> colors) {
  const std::size_t n = rt.parent.size();
  std::vector<int> height(n, 0);
  int max_height = 0;
  for (auto it = rt.bfs_order.rbegin(); it != rt.bfs_order.rend(); ++it) {
    const Vertex v = *it;
    if (rt.parent[v] >= 0) height[rt.parent[v]] = std::max(height[rt.parent[v]], height[v] + 1);
    max_height = std::max(max_height, height[v]);
  }
  std::vector<std::vector<Vertex>> by_height(static_cast<std::size_t>(max_height) + 1);
  for (Vertex v : rt.bfs_order) by_height[height[v]].push_back(v);

  rt.name.assign(n, -1);
  int next = 0;
  std::vector<std::vector<int>> tuple(n);
  for (auto& level : by_height) {
    for (Vertex v : level) {
      auto& tup = tuple[v];
      tup.push_back(colors[v]);
      for (Vertex c : rt.children[v]) tup.push_back(rt.name[c]);
      std::sort(tup.begin() + 1, tup.end());
    }
    std::sort(level.begin(), level.end(), [&](Vertex a, Vertex b) { return tuple[a] < tuple[b]; });
    int rank = -1;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i == 0 || tuple[level[i]] != tuple[level[i - 1]]) ++rank;
      rt.name[level[i]] = next + rank;
    }
    next += rank + 1;
    for (Vertex v : level) tuple[v].clear();
  }
}

inline void sort_children_by_name(RootedTree& rt) {
  for (auto& kids : rt.children) {
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return rt.name[a] < rt.name[b]; });
  }
  std::stable_sort(rt.roots.begin(), rt.roots.end(), [&](Vertex a, Vertex b) { return rt.name[a] < rt.name[b]; });
}

/// Preorder with children visited by name; requires sort_children_by_name.
inline std::vector<Vertex> canonical_preorder(const RootedTree& rt) {
  std::vector<Vertex> order;
  order.reserve(rt.parent.size());
  std::vector<Vertex> stack(rt.roots.rbegin(), rt.roots.rend());
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = rt.children[v].rbegin(); it != rt.children[v].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

/// [number of roots, then (color, child count) along the preorder].
inline std::vector<int> tree_code(const RootedTree& rt, std::span<const int> colors,
                                  std::span<const Vertex> preorder) {
  std::vector<int> code{static_cast<int>(rt.roots.size())};
  for (Vertex v : preorder) {
    code.push_back(colors[v]);
    code.push_back(static_cast<int>(rt.children[v].size()));
  }
  return code;
}

/// Canonically hung tree: at the given root, else at the center or centers.
inline RootedTree canonical_rooting(const Graph& t, std::span<const int> colors, std::optional<Vertex> root) {
  std::vector<Vertex> roots;
  if (root) {
    roots.push_back(*root);
  } else {
    roots = tree_centers(t);
  }
  RootedTree rt = root_tree(t, roots);
  name_subtrees(rt, colors);
  sort_children_by_name(rt);
  return rt;
}

}  // namespace detail

/// Canonical form of a colored tree, rooted at `root` if given and at its
/// center(s) otherwise. A bicentered tree is encoded as its two center halves
/// in name order, which is the same as rooting at the subdivided center edge.
inline CanonicalForm tree_canon(const Graph& t, const VertexColoring* coloring = nullptr,
                                std::optional<Vertex> root = std::nullopt) {
  if (!detail::is_tree(t)) throw std::invalid_argument("tree_canon: input is not a tree");
  const std::size_t n = t.order();
  if (root && (*root < 0 || static_cast<std::size_t>(*root) >= n)) {
    throw std::out_of_range("tree_canon: root out of range");
  }
  if (coloring && coloring->size() != n) throw std::invalid_argument("tree_canon: coloring size mismatch");
  std::vector<int> colors(n, 0);
  if (coloring) colors.assign(coloring->values().begin(), coloring->values().end());

  const auto rt = detail::canonical_rooting(t, colors, root);
  const auto preorder = detail::canonical_preorder(rt);
  const auto code = detail::tree_code(rt, colors, preorder);
  std::string text = root ? "rooted-tree:" : "tree:";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(code[i]);
  }
  std::vector<Vertex> position(n);
  for (std::size_t p = 0; p < n; ++p) position[preorder[p]] = static_cast<Vertex>(p);
  return {std::move(text), Permutation(std::move(position))};
}

}  // namespace fpf
