#pragma once

// The recursive modular decomposition of a graph, with every node named by
// the isomorphism class of the module it spans. Siblings with equal names
// are isomorphic modules, and zipping their canonical vertex orders gives an
// explicit isomorphism between them.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpf/errors.hpp"
#include "fpf/graph.hpp"
#include "fpf/modular_decomposition.hpp"
#include "fpf/small_canon.hpp"
#include "fpf/spider.hpp"
#include "fpf/tree_canon.hpp"

namespace fpf {

enum class QuotientClassTag { Complete, Edgeless, Tree, CoTree, Spider, SmallPrime, Unsupported };

inline std::string_view to_string(QuotientClassTag tag) {
  switch (tag) {
    case QuotientClassTag::Complete: return "Complete";
    case QuotientClassTag::Edgeless: return "Edgeless";
    case QuotientClassTag::Tree: return "Tree";
    case QuotientClassTag::CoTree: return "CoTree";
    case QuotientClassTag::Spider: return "Spider";
    case QuotientClassTag::SmallPrime: return "SmallPrime";
    case QuotientClassTag::Unsupported: return "Unsupported";
  }
  return "?";
}

struct QuotientClass {
  QuotientClassTag tag;
  std::optional<SpiderDecomposition> spider;
};

/// Tags a quotient graph, testing Edgeless, Complete, Tree, CoTree, Spider
/// and SmallPrime in that order.
inline QuotientClass classify_quotient(const Graph& q, std::size_t prime_cap = kDefaultBruteForceCap) {
  const std::size_t k = q.order();
  if (q.is_edgeless()) return {QuotientClassTag::Edgeless, std::nullopt};
  if (q.is_complete()) return {QuotientClassTag::Complete, std::nullopt};
  if (detail::is_tree(q)) return {QuotientClassTag::Tree, std::nullopt};
  const std::size_t co_edges = k * (k - 1) / 2 - q.size();
  if (co_edges + 1 == k && detail::is_tree(complement(q))) return {QuotientClassTag::CoTree, std::nullopt};
  if (auto sd = recognize_spider(q)) return {QuotientClassTag::Spider, std::move(sd)};
  if (k <= prime_cap) return {QuotientClassTag::SmallPrime, std::nullopt};
  return {QuotientClassTag::Unsupported, std::nullopt};
}

struct DecompositionNode {
  /// The vertex of a leaf; -1 for internal nodes.
  Vertex vertex = -1;
  std::size_t module_size = 1;
  bool leaf = true;
  PartitionKind kind = PartitionKind::parallel;
  QuotientClassTag tag = QuotientClassTag::Edgeless;
  /// Child node ids; child i is quotient vertex i.
  std::vector<int> children;
  /// Stored for prime nodes only; parallel and series quotients are implicit.
  Graph quotient;
  std::optional<SpiderDecomposition> spider;
  /// Quotient vertices in canonical order.
  std::vector<int> canonical_children;
  int height = 0;
  /// Isomorphism class of the module among all modules of this tree.
  int name = -1;
};

class DecompositionTree {
 public:
  explicit DecompositionTree(const Graph& g, std::size_t prime_cap = kDefaultBruteForceCap)
      : order_(g.order()), prime_cap_(prime_cap) {
    if (g.order() == 0) throw std::invalid_argument("DecompositionTree: empty graph");
    build(g);
    assign_names();
  }

  std::size_t graph_order() const noexcept { return order_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  int root() const noexcept { return 0; }
  const DecompositionNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<DecompositionNode>& nodes() const noexcept { return nodes_; }

  /// Node ids ordered so that children precede parents.
  std::vector<int> bottom_up() const {
    std::vector<int> ids(nodes_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) { return nodes_[a].height < nodes_[b].height; });
    return ids;
  }

  /// Quotient graph of an internal node, materialized on demand.
  Graph quotient_graph(int id) const {
    const auto& nd = node(id);
    if (nd.leaf) throw std::invalid_argument("quotient_graph: leaf node");
    if (nd.kind == PartitionKind::parallel) return Graph::empty(nd.children.size());
    if (nd.kind == PartitionKind::series) return Graph::complete(nd.children.size());
    return nd.quotient;
  }

  /// Quotient vertices colored by the names of their modules.
  VertexColoring quotient_coloring(int id) const {
    const auto& nd = node(id);
    std::vector<int> raw;
    raw.reserve(nd.children.size());
    for (int c : nd.children) raw.push_back(nodes_[c].name);
    return VertexColoring(raw);
  }

  /// The module's vertices, ascending.
  VertexSet module_vertices(int id) const {
    auto out = canonical_order(id);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// The module's vertices in canonical order.
  std::vector<Vertex> canonical_order(int id) const {
    std::vector<Vertex> out;
    out.reserve(node(id).module_size);
    std::vector<int> stack{id};
    while (!stack.empty()) {
      const auto& nd = nodes_[stack.back()];
      stack.pop_back();
      if (nd.leaf) {
        out.push_back(nd.vertex);
        continue;
      }
      for (auto it = nd.canonical_children.rbegin(); it != nd.canonical_children.rend(); ++it) {
        stack.push_back(nd.children[*it]);
      }
    }
    return out;
  }

  /// Serialization of the module: "v" for a vertex, U(...) and J(...) for
  /// parallel and series nodes, and for prime nodes the tag, the quotient
  /// relabeled into canonical order, and the children in that order.
  std::string canonical_string(int id) const {
    std::string out;
    // Either a node to expand (id >= 0) or a literal (id < 0, index ~id).
    std::vector<std::string> literals;
    std::vector<int> stack{id};
    auto push_literal = [&](std::string s) {
      literals.push_back(std::move(s));
      stack.push_back(~static_cast<int>(literals.size() - 1));
    };
    while (!stack.empty()) {
      const int top = stack.back();
      stack.pop_back();
      if (top < 0) {
        out += literals[~top];
        continue;
      }
      const auto& nd = nodes_[top];
      if (nd.leaf) {
        out += 'v';
        continue;
      }
      push_literal(")");
      for (std::size_t i = nd.canonical_children.size(); i-- > 0;) {
        stack.push_back(nd.children[nd.canonical_children[i]]);
        if (i > 0) push_literal(",");
      }
      out += node_header(nd);
      out += '(';
    }
    return out;
  }

 private:
  struct Work {
    Graph local;
    std::vector<Vertex> to_original;
    int id;
  };

  int add_leaf(Vertex v) {
    DecompositionNode nd;
    nd.vertex = v;
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size() - 1);
  }

  void build(const Graph& g) {
    std::vector<Vertex> all(g.order());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
    if (g.order() == 1) {
      add_leaf(0);
      return;
    }
    nodes_.emplace_back();
    std::vector<Work> stack;
    stack.push_back({g, std::move(all), 0});
    std::vector<Vertex> scratch;
    while (!stack.empty()) {
      Work w = std::move(stack.back());
      stack.pop_back();
      const std::size_t n = w.local.order();
      auto cp = detail::classified_maximal_partition(w.local);
      {
        auto& nd = nodes_[w.id];
        nd.module_size = n;
        nd.leaf = false;
        nd.kind = cp.kind;
        if (cp.kind == PartitionKind::parallel) {
          nd.tag = QuotientClassTag::Edgeless;
        } else if (cp.kind == PartitionKind::series) {
          nd.tag = QuotientClassTag::Complete;
        } else {
          nd.quotient = detail::quotient_unchecked(w.local, cp.partition);
          auto qc = classify_quotient(nd.quotient, prime_cap_);
          if (qc.tag == QuotientClassTag::Unsupported) throw UnsupportedQuotient(nd.quotient.order(), n);
          nd.tag = qc.tag;
          nd.spider = std::move(qc.spider);
        }
      }
      scratch.assign(n, -1);
      std::vector<int> kids;
      kids.reserve(cp.partition.parts.size());
      for (const auto& part : cp.partition.parts) {
        if (part.size() == 1) {
          kids.push_back(add_leaf(w.to_original[part.front()]));
          continue;
        }
        nodes_.emplace_back();
        const int child = static_cast<int>(nodes_.size() - 1);
        kids.push_back(child);
        std::vector<Vertex> to_original(part.size());
        for (std::size_t i = 0; i < part.size(); ++i) to_original[i] = w.to_original[part[i]];
        stack.push_back({detail::induced_sorted(w.local, part, scratch), std::move(to_original), child});
      }
      nodes_[w.id].children = std::move(kids);
    }
  }

  // Class description of a node given its children's names, and the
  // canonical order of its quotient vertices.
  std::vector<int> describe(DecompositionNode& nd) const {
    const std::size_t k = nd.children.size();
    std::vector<int> colors(k);
    for (std::size_t i = 0; i < k; ++i) colors[i] = nodes_[nd.children[i]].name;
    std::vector<int> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = static_cast<int>(i);
    std::vector<int> desc;
    switch (nd.tag) {
      case QuotientClassTag::Edgeless:
      case QuotientClassTag::Complete: {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
        desc.push_back(nd.tag == QuotientClassTag::Edgeless ? 1 : 2);
        for (int i : order) desc.push_back(colors[i]);
        break;
      }
      case QuotientClassTag::Tree:
      case QuotientClassTag::CoTree: {
        const Graph t = nd.tag == QuotientClassTag::Tree ? nd.quotient : complement(nd.quotient);
        const auto rt = detail::canonical_rooting(t, colors, std::nullopt);
        const auto pre = detail::canonical_preorder(rt);
        order.assign(pre.begin(), pre.end());
        desc.push_back(nd.tag == QuotientClassTag::Tree ? 3 : 4);
        const auto code = detail::tree_code(rt, colors, pre);
        desc.insert(desc.end(), code.begin(), code.end());
        break;
      }
      case QuotientClassTag::Spider: {
        const auto& sd = *nd.spider;
        std::vector<std::size_t> pairs(sd.legs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i] = i;
        auto key = [&](std::size_t i) { return std::pair(colors[sd.legs[i]], colors[sd.knees[i]]); };
        std::stable_sort(pairs.begin(), pairs.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        order.clear();
        desc = {5, sd.thin ? 1 : 0, static_cast<int>(sd.head.size())};
        for (Vertex h : sd.head) {
          order.push_back(h);
          desc.push_back(colors[h]);
        }
        for (std::size_t i : pairs) {
          order.push_back(sd.legs[i]);
          order.push_back(sd.knees[i]);
          desc.push_back(colors[sd.legs[i]]);
          desc.push_back(colors[sd.knees[i]]);
        }
        break;
      }
      case QuotientClassTag::SmallPrime: {
        auto sc = detail::small_canonical(nd.quotient, colors);
        order.assign(sc.order.begin(), sc.order.end());
        desc.push_back(6);
        desc.insert(desc.end(), sc.code.begin(), sc.code.end());
        break;
      }
      case QuotientClassTag::Unsupported:
        throw std::logic_error("describe: unsupported node");
    }
    nd.canonical_children = std::move(order);
    return desc;
  }

  void assign_names() {
    const std::size_t count = nodes_.size();
    // Parents were created before their children.
    for (std::size_t i = count; i-- > 0;) {
      auto& nd = nodes_[i];
      nd.height = 0;
      for (int c : nd.children) nd.height = std::max(nd.height, nodes_[c].height + 1);
    }
    const auto ids = bottom_up();
    std::vector<std::vector<int>> desc(count);
    int next = 0;
    for (std::size_t lo = 0; lo < ids.size();) {
      std::size_t hi = lo;
      while (hi < ids.size() && nodes_[ids[hi]].height == nodes_[ids[lo]].height) ++hi;
      std::vector<int> level(ids.begin() + static_cast<std::ptrdiff_t>(lo), ids.begin() + static_cast<std::ptrdiff_t>(hi));
      for (int id : level) {
        if (nodes_[id].leaf) {
          desc[id] = {0};
        } else {
          desc[id] = describe(nodes_[id]);
        }
      }
      std::sort(level.begin(), level.end(), [&](int a, int b) { return desc[a] < desc[b]; });
      int rank = -1;
      for (std::size_t i = 0; i < level.size(); ++i) {
        if (i == 0 || desc[level[i]] != desc[level[i - 1]]) ++rank;
        nodes_[level[i]].name = next + rank;
      }
      next += rank + 1;
      for (int id : level) {
        desc[id].clear();
        desc[id].shrink_to_fit();
      }
      lo = hi;
    }
  }

  std::string node_header(const DecompositionNode& nd) const {
    if (nd.kind == PartitionKind::parallel) return "U";
    if (nd.kind == PartitionKind::series) return "J";
    const std::size_t k = nd.children.size();
    std::vector<int> position(k);
    for (std::size_t p = 0; p < k; ++p) position[nd.canonical_children[p]] = static_cast<int>(p);
    std::vector<Edge> edges;
    for (auto [a, b] : nd.quotient.edges()) {
      auto pa = position[a];
      auto pb = position[b];
      if (pa > pb) std::swap(pa, pb);
      edges.emplace_back(pa, pb);
    }
    std::sort(edges.begin(), edges.end());
    std::string s(to_string(nd.tag));
    s += '[' + std::to_string(k) + ';';
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(edges[i].first) + '-' + std::to_string(edges[i].second);
    }
    s += ']';
    return s;
  }

  std::size_t order_;
  std::size_t prime_cap_;
  std::vector<DecompositionNode> nodes_;
};

}  // namespace fpf
