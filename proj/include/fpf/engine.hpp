#pragma once

// Fixed-point-free automorphisms and involutions through modular
// decomposition. A module has a witness iff its colored quotient has a PFPF
// witness whose allowed fixed points are exactly the children that have
// witnesses themselves.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fpf/decomposition.hpp"
#include "fpf/graph.hpp"
#include "fpf/pfpf.hpp"

namespace fpf {

struct EngineOptions {
  std::size_t prime_cap = kDefaultBruteForceCap;
  bool trace = false;
  bool witness = true;
};

struct TraceEntry {
  VertexSet module;
  /// Absent for single vertices.
  std::optional<QuotientClassTag> tag;
  bool decision = false;
};

struct EngineResult {
  bool decision = false;
  std::optional<Permutation> witness;
  std::vector<TraceEntry> trace;
  /// Modules whose decision was computed rather than reused.
  std::size_t recursive_calls = 0;
};

namespace detail {

/// Images of a PFPF witness on the quotient of `id`, or absent.
inline std::optional<std::vector<Vertex>> solve_quotient(const DecompositionTree& tree, int id,
                                                         const std::vector<char>& decided, Mode mode,
                                                         std::size_t prime_cap) {
  const auto& nd = tree.node(id);
  const std::size_t k = nd.children.size();
  std::vector<bool> allowed(k);
  std::vector<int> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    allowed[i] = decided[nd.children[i]] != 0;
    names[i] = tree.node(nd.children[i]).name;
  }
  if (nd.tag == QuotientClassTag::Edgeless || nd.tag == QuotientClassTag::Complete) {
    return solve_color_classes(names, allowed, mode);
  }
  PfpfInstance inst{nd.quotient, VertexColoring(names), BooleanMask(std::move(allowed)), mode};
  std::optional<Permutation> psi;
  switch (nd.tag) {
    case QuotientClassTag::Tree: psi = pfpf_tree(inst); break;
    case QuotientClassTag::CoTree: psi = pfpf_co_tree(inst); break;
    case QuotientClassTag::Spider: psi = pfpf_spider(inst, *nd.spider); break;
    case QuotientClassTag::SmallPrime: psi = pfpf_bruteforce(inst, std::max(prime_cap, k)); break;
    default: throw std::logic_error("solve_quotient: unexpected tag");
  }
  if (!psi) return std::nullopt;
  const auto images = psi->images();
  return std::vector<Vertex>(images.begin(), images.end());
}

}  // namespace detail

inline EngineResult solve(const Graph& g, Mode mode, const EngineOptions& options = {}) {
  if (g.order() == 0) throw std::invalid_argument("solve: empty graph");
  const DecompositionTree tree(g, options.prime_cap);
  EngineResult result;
  std::vector<char> decided(tree.size(), 0);
  std::unordered_map<int, char> memo;
  for (int id : tree.bottom_up()) {
    const auto& nd = tree.node(id);
    if (nd.leaf) continue;
    auto hit = memo.find(nd.name);
    if (hit != memo.end()) {
      decided[id] = hit->second;
      continue;
    }
    ++result.recursive_calls;
    decided[id] = detail::solve_quotient(tree, id, decided, mode, options.prime_cap).has_value();
    memo.emplace(nd.name, decided[id]);
  }
  if (tree.node(tree.root()).leaf) ++result.recursive_calls;
  result.decision = decided[tree.root()] != 0;

  if (options.trace) {
    for (int id : tree.bottom_up()) {
      const auto& nd = tree.node(id);
      TraceEntry e{tree.module_vertices(id), std::nullopt, decided[id] != 0};
      if (!nd.leaf) e.tag = nd.tag;
      result.trace.push_back(std::move(e));
    }
  }

  if (result.decision && options.witness) {
    std::vector<Vertex> image(g.order(), -1);
    std::vector<int> fixed{tree.root()};
    while (!fixed.empty()) {
      const int id = fixed.back();
      fixed.pop_back();
      const auto& nd = tree.node(id);
      const auto psi = detail::solve_quotient(tree, id, decided, mode, options.prime_cap);
      if (!psi) throw std::logic_error("solve: decided module lost its witness");
      for (std::size_t i = 0; i < nd.children.size(); ++i) {
        const int child = nd.children[i];
        if ((*psi)[i] == static_cast<Vertex>(i)) {
          fixed.push_back(child);
          continue;
        }
        // Isomorphic sibling modules line up along their canonical orders.
        const auto from = tree.canonical_order(child);
        const auto to = tree.canonical_order(nd.children[(*psi)[i]]);
        for (std::size_t p = 0; p < from.size(); ++p) image[from[p]] = to[p];
      }
    }
    result.witness = Permutation(std::move(image));
  }
  return result;
}

inline EngineResult has_fpf_automorphism(const Graph& g, const EngineOptions& options = {}) {
  return solve(g, Mode::automorphism, options);
}

inline EngineResult has_fpf_involution(const Graph& g, const EngineOptions& options = {}) {
  return solve(g, Mode::involution, options);
}

/// A "true" decision must carry a fixed-point-free automorphism of g, self
/// inverse in involution mode; a "false" one must carry nothing.
inline bool verify_result(const Graph& g, Mode mode, const EngineResult& r) {
  if (!r.decision) return !r.witness.has_value();
  if (!r.witness) return false;
  const Permutation& p = *r.witness;
  if (p.size() != g.order() || !p.is_fixed_point_free() || !is_automorphism(g, p)) return false;
  return mode == Mode::automorphism || p.is_self_inverse();
}

}  // namespace fpf
