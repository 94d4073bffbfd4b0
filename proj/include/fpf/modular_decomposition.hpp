#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpf/canonical_form.hpp"
#include "fpf/graph.hpp"

namespace fpf {

/// A partition of V into modules. Parts are sorted and ordered by their
/// smallest vertex.
struct ModularPartition {
  std::vector<VertexSet> parts;

  std::size_t size() const noexcept { return parts.size(); }

  /// part_index()[v] is the index of the part holding v.
  std::vector<int> part_index(std::size_t n) const {
    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (Vertex v : parts[i]) index[v] = static_cast<int>(i);
    }
    return index;
  }

  friend bool operator==(const ModularPartition&, const ModularPartition&) = default;
};

/// How the maximal modular partition arose: components (parallel),
/// co-components (series), or the maximal strong modules of a graph that is
/// connected and co-connected (prime).
enum class PartitionKind { parallel, series, prime };

/// True iff no vertex outside m splits m.
inline bool is_module(const Graph& g, std::span<const Vertex> m) {
  if (m.empty()) throw std::invalid_argument("is_module: empty set");
  std::vector<int> inside_count(g.order(), 0);
  std::vector<char> member(g.order(), 0);
  for (Vertex v : m) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      throw std::invalid_argument("is_module: vertex not in graph");
    }
    member[v] = 1;
  }
  std::size_t size = 0;
  for (std::size_t v = 0; v < g.order(); ++v) size += member[v];
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!member[v]) continue;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (!member[w]) ++inside_count[w];
    }
  }
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (!member[w] && inside_count[w] != 0 && static_cast<std::size_t>(inside_count[w]) != size) {
      return false;
    }
  }
  return true;
}

namespace detail {

/// Partition refinement computing the maximal modules of g that avoid a
/// chosen vertex v. Starting from {N(v), V - N[v]}, every vertex pivots on
/// the parts not containing it until no part is split by an outside vertex.
class VertexPartition {
 public:
  VertexPartition(const Graph& g, Vertex v)
      : g_(g), pos_(g.order(), -1), part_of_(g.order(), -1), queued_(g.order(), 0) {
    for (std::size_t u = 0; u < g.order(); ++u) {
      if (static_cast<Vertex>(u) == v) continue;
      pos_[u] = static_cast<int>(elems_.size());
      part_of_[u] = 0;
      elems_.push_back(static_cast<Vertex>(u));
    }
    begin_.push_back(0);
    end_.push_back(static_cast<int>(elems_.size()));
    marked_.push_back(0);
    split_by(v);
    for (Vertex u : elems_) enqueue(u);
    while (!queue_.empty()) {
      Vertex u = queue_.front();
      queue_.pop_front();
      queued_[u] = 0;
      split_by(u);
    }
  }

  std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out;
    for (std::size_t p = 0; p < begin_.size(); ++p) {
      VertexSet part(elems_.begin() + begin_[p], elems_.begin() + end_[p]);
      std::sort(part.begin(), part.end());
      out.push_back(std::move(part));
    }
    return out;
  }

 private:
  void enqueue(Vertex u) {
    if (!queued_[u]) {
      queued_[u] = 1;
      queue_.push_back(u);
    }
  }

  void split_by(Vertex pivot) {
    const int own = part_of_[pivot];
    touched_.clear();
    for (Vertex w : g_.neighbors(pivot)) {
      const int p = part_of_[w];
      if (p < 0 || p == own) continue;
      const int target = begin_[p] + marked_[p];
      const int from = pos_[w];
      std::swap(elems_[from], elems_[target]);
      pos_[elems_[from]] = from;
      pos_[elems_[target]] = target;
      if (marked_[p]++ == 0) touched_.push_back(p);
    }
    for (int p : touched_) {
      const int m = marked_[p];
      marked_[p] = 0;
      if (m == end_[p] - begin_[p]) continue;
      const int q = static_cast<int>(begin_.size());
      begin_.push_back(begin_[p]);
      end_.push_back(begin_[p] + m);
      marked_.push_back(0);
      begin_[p] += m;
      for (int i = begin_[q]; i < end_[q]; ++i) part_of_[elems_[i]] = q;
      for (int i = begin_[q]; i < end_[p]; ++i) enqueue(elems_[i]);
    }
  }

  const Graph& g_;
  std::vector<Vertex> elems_;
  std::vector<int> pos_;
  std::vector<int> part_of_;
  std::vector<int> begin_;
  std::vector<int> end_;
  std::vector<int> marked_;
  std::vector<int> touched_;
  std::vector<char> queued_;
  std::deque<Vertex> queue_;
};

/// Smallest module containing {a, b} is all of V? Grows the seed set by
/// absorbing splitters. `full` holds the touched outside vertices adjacent to
/// the whole current set; it only shrinks, which keeps the work O(n + m).
inline bool module_closure_is_everything(const Graph& g, Vertex a, Vertex b) {
  const std::size_t n = g.order();
  std::vector<char> in_set(n, 0);
  std::vector<char> pending(n, 0);
  std::vector<char> touched(n, 0);
  std::vector<char> mark(n, 0);
  std::vector<Vertex> full;
  std::vector<Vertex> next_full;
  std::vector<Vertex> queue{a, b};
  pending[a] = pending[b] = 1;
  std::size_t size = 0;
  while (!queue.empty()) {
    Vertex z = queue.back();
    queue.pop_back();
    if (in_set[z]) continue;
    in_set[z] = 1;
    ++size;
    if (size == n) return true;
    for (Vertex y : g.neighbors(z)) mark[y] = 1;
    next_full.clear();
    for (Vertex y : full) {
      if (in_set[y] || pending[y]) continue;
      if (mark[y]) {
        next_full.push_back(y);
      } else {
        pending[y] = 1;
        queue.push_back(y);
      }
    }
    full.swap(next_full);
    for (Vertex y : g.neighbors(z)) {
      mark[y] = 0;
      if (in_set[y] || touched[y]) continue;
      touched[y] = 1;
      if (size == 1) {
        full.push_back(y);
      } else if (!pending[y]) {
        pending[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return size == n;
}

/// Maximal strong modules of a connected, co-connected graph with >= 2
/// vertices. With v of minimum degree, the parts of the vertex partition
/// P(g, v) outside v's maximal strong module M_v are exactly the other maximal
/// strong modules, and M_v is the part holding v in P(g, w) for any w outside
/// M_v. A part X lies outside M_v iff the smallest module containing v and
/// any x in X is all of V.
inline std::vector<VertexSet> prime_case_partition(const Graph& g) {
  Vertex v = 0;
  for (std::size_t u = 1; u < g.order(); ++u) {
    if (g.degree(static_cast<Vertex>(u)) < g.degree(v)) v = static_cast<Vertex>(u);
  }
  auto around_v = VertexPartition(g, v).parts();
  std::vector<std::size_t> order(around_v.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return around_v[x].size() < around_v[y].size();
  });
  Vertex outside = -1;
  for (std::size_t i : order) {
    if (module_closure_is_everything(g, v, around_v[i].front())) {
      outside = around_v[i].front();
      break;
    }
  }
  if (outside < 0) throw std::logic_error("prime_case_partition: graph is not prime-case");
  VertexSet module_of_v{v};
  for (auto& part : VertexPartition(g, outside).parts()) {
    if (std::binary_search(part.begin(), part.end(), v)) {
      module_of_v = std::move(part);
      break;
    }
  }
  std::vector<VertexSet> result;
  result.push_back(module_of_v);
  for (auto& part : around_v) {
    if (!std::binary_search(module_of_v.begin(), module_of_v.end(), part.front())) {
      result.push_back(std::move(part));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return result;
}

struct ClassifiedPartition {
  PartitionKind kind;
  ModularPartition partition;
};

inline ClassifiedPartition classified_maximal_partition(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() > 1) return {PartitionKind::parallel, {std::move(comps)}};
  auto co = co_components(g);
  if (co.size() > 1) return {PartitionKind::series, {std::move(co)}};
  return {PartitionKind::prime, {prime_case_partition(g)}};
}

/// Quotient adjacency read off one representative per part; assumes the
/// partition is modular.
inline Graph quotient_unchecked(const Graph& g, const ModularPartition& p) {
  const auto index = p.part_index(g.order());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex w : g.neighbors(p.parts[i].front())) {
      const int j = index[w];
      if (static_cast<int>(i) < j) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return Graph::from_edge_list(p.parts.size(), edges);
}

}  // namespace detail

/// Partition of V into maximal strong modules: the connected components when
/// g is disconnected, the co-components when the complement is disconnected,
/// and otherwise the maximal strong modules of the prime case.
inline ModularPartition maximal_modular_partition(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("maximal_modular_partition: fewer than 2 vertices");
  return detail::classified_maximal_partition(g).partition;
}

/// Throws std::invalid_argument unless p is a partition of V into modules.
inline void check_modular_partition(const Graph& g, const ModularPartition& p) {
  std::vector<char> seen(g.order(), 0);
  std::size_t covered = 0;
  for (const auto& part : p.parts) {
    if (part.empty()) throw std::invalid_argument("modular partition: empty part");
    for (Vertex v : part) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[v]) {
        throw std::invalid_argument("modular partition: parts overlap or leave the graph");
      }
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != g.order()) throw std::invalid_argument("modular partition: parts do not cover V");
  // Each outside vertex must see each part all-or-nothing.
  const auto index = p.part_index(g.order());
  std::vector<std::size_t> hits(p.parts.size(), 0);
  std::vector<int> touched;
  for (std::size_t y = 0; y < g.order(); ++y) {
    touched.clear();
    for (Vertex w : g.neighbors(static_cast<Vertex>(y))) {
      const int j = index[w];
      if (j == index[y]) continue;
      if (hits[j]++ == 0) touched.push_back(j);
    }
    for (int j : touched) {
      const bool uniform = hits[j] == p.parts[j].size();
      hits[j] = 0;
      if (!uniform) throw std::invalid_argument("modular partition: a part is not a module");
    }
  }
}

/// Quotient graph: one vertex per part, adjacent iff the parts are fully
/// adjacent in g.
inline Graph quotient(const Graph& g, const ModularPartition& p) {
  check_modular_partition(g, p);
  return detail::quotient_unchecked(g, p);
}

struct Substitution {
  Graph graph;
  /// offsets[i] is the first vertex id of the copy of parts[i].
  std::vector<Vertex> offsets;
};

/// pattern(parts[0], ..., parts[k-1]): vertex i of the pattern is replaced by
/// a copy of parts[i]; copies of adjacent pattern vertices are fully joined.
inline Substitution substitute(const Graph& pattern, std::span<const Graph> parts) {
  if (parts.size() != pattern.order()) throw std::invalid_argument("substitute: one graph per pattern vertex");
  std::vector<Vertex> offsets(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offsets[i + 1] = offsets[i] + static_cast<Vertex>(parts[i].order());
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i].edges()) edges.emplace_back(offsets[i] + u, offsets[i] + v);
  }
  for (auto [i, j] : pattern.edges()) {
    for (Vertex u = offsets[i]; u < offsets[i + 1]; ++u) {
      for (Vertex v = offsets[j]; v < offsets[j + 1]; ++v) edges.emplace_back(u, v);
    }
  }
  Graph g = Graph::from_edge_list(static_cast<std::size_t>(offsets.back()), edges);
  offsets.pop_back();
  return {std::move(g), std::move(offsets)};
}

/// (G_/P, c): the quotient colored by isomorphism class of the modules, with
/// an explicit isomorphism from every module onto its class representative.
struct ColoredQuotient {
  Graph quotient;
  VertexColoring coloring;
  std::vector<VertexSet> part_of;
  /// representative[c] is the quotient vertex standing for color c.
  std::vector<Vertex> representative;
  /// to_representative[i][k] is the position within part_of[rep] of the image
  /// of part_of[i][k], rep being the representative of i's color.
  std::vector<std::vector<int>> to_representative;

  /// Isomorphism G[M_i] -> G[M_j] for equally colored i and j, as images
  /// aligned with part_of[i]. Routed through the class representative.
  std::vector<Vertex> module_map(Vertex i, Vertex j) const {
    if (coloring[i] != coloring[j]) throw std::invalid_argument("module_map: modules differ in color");
    const auto& into_rep_i = to_representative[i];
    const auto& into_rep_j = to_representative[j];
    std::vector<int> from_rep_j(into_rep_j.size());
    for (std::size_t k = 0; k < into_rep_j.size(); ++k) from_rep_j[into_rep_j[k]] = static_cast<int>(k);
    std::vector<Vertex> images(into_rep_i.size());
    for (std::size_t k = 0; k < into_rep_i.size(); ++k) {
      images[k] = part_of[j][from_rep_j[into_rep_i[k]]];
    }
    return images;
  }
};

/// `canon` maps a graph to a CanonicalForm; modules with equal canonical
/// strings receive equal colors. Exceptions from `canon` propagate.
template <class Canonizer>
ColoredQuotient colored_quotient(const Graph& g, const ModularPartition& p, Canonizer&& canon) {
  ColoredQuotient cq;
  cq.quotient = quotient(g, p);
  cq.part_of = p.parts;
  const std::size_t k = p.parts.size();
  std::vector<InducedSubgraph> subs;
  std::vector<CanonicalForm> forms;
  subs.reserve(k);
  forms.reserve(k);
  std::map<std::string, int> color_of;
  std::vector<int> raw(k);
  for (std::size_t i = 0; i < k; ++i) {
    subs.push_back(induced_subgraph(g, p.parts[i]));
    forms.push_back(canon(subs.back().graph));
    auto [it, inserted] = color_of.emplace(forms.back().canonical, static_cast<int>(color_of.size()));
    if (inserted) cq.representative.push_back(static_cast<Vertex>(i));
    raw[i] = it->second;
  }
  cq.coloring = VertexColoring(raw);
  cq.to_representative.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex rep = cq.representative[raw[i]];
    const Permutation from_rep_canon = forms[rep].labeling.inverse();
    std::vector<Vertex> image(subs[i].graph.order());
    for (std::size_t local = 0; local < image.size(); ++local) {
      image[local] = from_rep_canon(forms[i].labeling(static_cast<Vertex>(local)));
    }
    Permutation iso(image);
    if (!is_isomorphism(subs[i].graph, subs[rep].graph, iso)) {
      throw std::logic_error("colored_quotient: canonical labelings disagree");
    }
    cq.to_representative[i].assign(image.begin(), image.end());
  }
  return cq;
}

}  // namespace fpf
