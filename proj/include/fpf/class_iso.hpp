#pragma once

// Isomorphism for the graph classes that occur as modules: bounded-size
// graphs, trees, and graphs whose decomposition bottoms out in supported
// quotients.

#include <optional>

#include "fpf/canonical_form.hpp"
#include "fpf/decomposition.hpp"
#include "fpf/graph.hpp"
#include "fpf/small_canon.hpp"
#include "fpf/tree_canon.hpp"

namespace fpf {

/// Canonical form read off the decomposition tree. Throws
/// UnsupportedQuotient when some prime quotient is outside the supported
/// classes.
inline CanonicalForm decomposition_canon(const Graph& g, std::size_t prime_cap = kDefaultBruteForceCap) {
  const DecompositionTree tree(g, prime_cap);
  const auto order = tree.canonical_order(tree.root());
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<Vertex>(p);
  return {tree.canonical_string(tree.root()), Permutation(std::move(position))};
}

/// The isomorphism g1 -> g2 implied by two forms from the same canonizer,
/// checked against the graphs. Absent when the forms differ.
inline std::optional<Permutation> extract_iso(const Graph& g1, const CanonicalForm& f1,
                                              const Graph& g2, const CanonicalForm& f2) {
  if (f1.canonical != f2.canonical || f1.labeling.size() != f2.labeling.size()) return std::nullopt;
  Permutation map = compose(f2.labeling.inverse(), f1.labeling);
  if (!is_isomorphism(g1, g2, map)) return std::nullopt;
  return map;
}

}  // namespace fpf
