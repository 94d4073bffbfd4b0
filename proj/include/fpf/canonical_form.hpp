#pragma once

#include <string>

#include "fpf/permutation.hpp"

namespace fpf {

/// A canonical string for a graph (optionally colored) plus the canonical
/// labeling that produced it: labeling(v) is v's position in canonical order.
/// Within one canonizer, equal strings mean isomorphic inputs, and relabeling
/// any input by its labeling yields the same graph for every member of the
/// isomorphism class.
struct CanonicalForm {
  std::string canonical;
  Permutation labeling;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

}  // namespace fpf
