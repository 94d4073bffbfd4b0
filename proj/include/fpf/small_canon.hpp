#pragma once

// Brute-force isomorphism and canonical labeling for graphs within a small
// vertex cap. Used for prime quotients of bounded size.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpf/canonical_form.hpp"
#include "fpf/errors.hpp"
#include "fpf/graph.hpp"

namespace fpf {

inline constexpr std::size_t kDefaultBruteForceCap = 10;

namespace detail {

inline std::vector<char> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> m(n * n, 0);
  for (auto [u, v] : g.edges()) m[u * n + v] = m[v * n + u] = 1;
  return m;
}

/// Iterated color refinement started from `colors`, with cells numbered by
/// the sorted order of their signatures so the result is labeling-invariant.
inline std::vector<int> refine_colors(const Graph& g, std::span<const int> colors) {
  const std::size_t n = g.order();
  std::vector<int> cell(colors.begin(), colors.end());
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(cell[v]);
      std::vector<int> around;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) around.push_back(cell[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) return cell;
    classes = distinct.size();
  }
}

struct SmallCanon {
  /// [n, color at each position..., adjacency bits of each position against
  /// all earlier positions...]
  std::vector<int> code;
  /// order[p] is the vertex placed at canonical position p.
  std::vector<Vertex> order;
};

/// Lexicographically least code over all labelings compatible with the
/// refined ordered partition, found by branch and bound.
class SmallCanonSearch {
 public:
  SmallCanonSearch(const Graph& g, std::span<const int> colors)
      : n_(g.order()), adj_(adjacency_matrix(g)), colors_(colors.begin(), colors.end()) {
    cell_ = refine_colors(g, colors);
    std::vector<int> sorted = cell_;
    std::sort(sorted.begin(), sorted.end());
    cell_at_ = sorted;
    used_.assign(n_, 0);
    current_.reserve(n_);
    search(0, false);
  }

  SmallCanon result() const {
    SmallCanon out;
    out.code.push_back(static_cast<int>(n_));
    for (Vertex v : best_) out.code.push_back(colors_[v]);
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t q = 0; q < p; ++q) out.code.push_back(adj_[best_[p] * n_ + best_[q]]);
    }
    out.order = best_;
    return out;
  }

 private:
  // Compares the row of position p (bits against earlier positions) between
  // the current prefix and the best labeling: -1, 0, or 1.
  int compare_row(std::size_t p) const {
    for (std::size_t q = 0; q < p; ++q) {
      const char a = adj_[current_[p] * n_ + current_[q]];
      const char b = adj_[best_[p] * n_ + best_[q]];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  void search(std::size_t p, bool already_smaller) {
    if (p == n_) {
      if (best_.empty() || already_smaller) {
        best_ = current_;
        ++generation_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || cell_[v] != cell_at_[p]) continue;
      current_.push_back(static_cast<Vertex>(v));
      bool smaller = already_smaller;
      bool prune = false;
      if (!best_.empty() && !already_smaller) {
        const int c = compare_row(p);
        if (c > 0) prune = true;
        if (c < 0) smaller = true;
      }
      if (!prune) {
        used_[v] = 1;
        const std::size_t before = generation_;
        search(p + 1, smaller);
        // A new best extends this prefix, so the prefix is no longer smaller.
        if (generation_ != before) already_smaller = false;
        used_[v] = 0;
      }
      current_.pop_back();
    }
  }

  std::size_t n_;
  std::vector<char> adj_;
  std::vector<int> colors_;
  std::vector<int> cell_;
  std::vector<int> cell_at_;
  std::vector<char> used_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::size_t generation_ = 0;
};

inline SmallCanon small_canonical(const Graph& g, std::span<const int> colors) {
  return SmallCanonSearch(g, colors).result();
}

}  // namespace detail

/// Canonical form of a (colored) graph by exhaustive labeling search.
inline CanonicalForm small_graph_canon(const Graph& g, const VertexColoring* coloring = nullptr,
                                       std::size_t cap = kDefaultBruteForceCap) {
  if (g.order() > cap) throw CapExceeded("small_graph_canon", g.order(), cap);
  std::vector<int> colors(g.order(), 0);
  if (coloring) colors.assign(coloring->values().begin(), coloring->values().end());
  auto sc = detail::small_canonical(g, colors);
  std::string text = "small:";
  for (std::size_t i = 0; i < sc.code.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(sc.code[i]);
  }
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < sc.order.size(); ++p) position[sc.order[p]] = static_cast<Vertex>(p);
  return {std::move(text), Permutation(std::move(position))};
}

/// A (color-preserving, when both colorings are given) isomorphism g -> h,
/// found by backtracking with degree and color pruning.
inline std::optional<Permutation> iso_bruteforce(const Graph& g, const Graph& h,
                                                 const VertexColoring* gc = nullptr,
                                                 const VertexColoring* hc = nullptr,
                                                 std::size_t cap = kDefaultBruteForceCap) {
  const std::size_t n = g.order();
  if (n != h.order()) throw std::invalid_argument("iso_bruteforce: orders differ");
  if (n > cap) throw CapExceeded("iso_bruteforce", n, cap);
  if ((gc == nullptr) != (hc == nullptr)) throw std::invalid_argument("iso_bruteforce: give both colorings or neither");
  if (g.size() != h.size()) return std::nullopt;
  auto color = [](const VertexColoring* c, Vertex v) { return c ? (*c)[v] : 0; };

  // Visit g's vertices so that each one has as many mapped neighbors as possible.
  std::vector<Vertex> visit;
  std::vector<int> links(n, 0);
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (pick < 0 || links[v] > links[pick] ||
          (links[v] == links[pick] && g.degree(static_cast<Vertex>(v)) > g.degree(pick))) {
        pick = static_cast<Vertex>(v);
      }
    }
    placed[pick] = 1;
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick)) ++links[w];
  }

  const auto ga = detail::adjacency_matrix(g);
  const auto ha = detail::adjacency_matrix(h);
  std::vector<Vertex> image(n, -1);
  std::vector<char> taken(n, 0);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex v = visit[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (taken[w] || g.degree(v) != h.degree(static_cast<Vertex>(w)) ||
          color(gc, v) != color(hc, static_cast<Vertex>(w))) {
        continue;
      }
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex u = visit[d];
        ok = ga[v * n + u] == ha[w * n + image[u]];
      }
      if (!ok) continue;
      image[v] = static_cast<Vertex>(w);
      taken[w] = 1;
      if (self(self, depth + 1)) return true;
      taken[w] = 0;
      image[v] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return Permutation(std::move(image));
}

}  // namespace fpf
