#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "fpf/graph.hpp"

namespace fpf {

/// Spider with at most one head vertex: legs S (independent), knees K
/// (clique) with |S| = |K| >= 2, leg i paired with knee knees[i]. A thin
/// spider joins each leg to its own knee only; a thick one to every other
/// knee. The head sees all of K and none of S. For |K| = 2 the two readings
/// coincide and the thin one is reported.
struct SpiderDecomposition {
  VertexSet legs;
  VertexSet knees;
  VertexSet head;
  bool thin = true;

  std::size_t legs_count() const noexcept { return legs.size(); }

  friend bool operator==(const SpiderDecomposition&, const SpiderDecomposition&) = default;
};

/// Checks every spider axiom of sd against g.
inline bool is_valid_spider(const Graph& g, const SpiderDecomposition& sd) {
  const std::size_t t = sd.legs.size();
  if (t < 2 || sd.knees.size() != t || sd.head.size() > 1) return false;
  if (g.order() != 2 * t + sd.head.size()) return false;
  std::vector<char> seen(g.order(), 0);
  auto claim = [&](Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[v]) return false;
    seen[v] = 1;
    return true;
  };
  for (Vertex v : sd.legs) if (!claim(v)) return false;
  for (Vertex v : sd.knees) if (!claim(v)) return false;
  for (Vertex v : sd.head) if (!claim(v)) return false;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i != j && g.adjacent(sd.legs[i], sd.legs[j])) return false;
      if (i != j && !g.adjacent(sd.knees[i], sd.knees[j])) return false;
      const bool edge = g.adjacent(sd.legs[i], sd.knees[j]);
      const bool want = sd.thin ? (i == j) : (i != j);
      if (edge != want) return false;
    }
  }
  for (Vertex h : sd.head) {
    for (std::size_t i = 0; i < t; ++i) {
      if (g.adjacent(h, sd.legs[i]) || !g.adjacent(h, sd.knees[i])) return false;
    }
  }
  return true;
}

namespace detail {

inline std::optional<SpiderDecomposition> recognize_thin_spider(const Graph& g) {
  const std::size_t n = g.order();
  SpiderDecomposition sd;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(static_cast<Vertex>(v)) == 1) sd.legs.push_back(static_cast<Vertex>(v));
  }
  const std::size_t t = sd.legs.size();
  if (t < 2 || n < 2 * t || n - 2 * t > 1) return std::nullopt;
  std::vector<char> role(n, 0);  // 1 leg, 2 knee
  for (Vertex s : sd.legs) role[s] = 1;
  for (Vertex s : sd.legs) {
    const Vertex k = g.neighbors(s)[0];
    if (role[k] != 0) return std::nullopt;
    role[k] = 2;
    sd.knees.push_back(k);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (role[v] == 0) sd.head.push_back(static_cast<Vertex>(v));
  }
  const std::size_t expected = t + t * (t - 1) / 2 + sd.head.size() * t;
  if (g.size() != expected) return std::nullopt;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      if (!g.adjacent(sd.knees[i], sd.knees[j])) return std::nullopt;
    }
    for (Vertex h : sd.head) {
      if (!g.adjacent(h, sd.knees[i])) return std::nullopt;
    }
  }
  sd.thin = true;
  return sd;
}

}  // namespace detail

/// The (S, K, R, f, thin) decomposition of g if g is a spider with |R| <= 1.
inline std::optional<SpiderDecomposition> recognize_spider(const Graph& g) {
  if (g.order() < 4) return std::nullopt;
  if (auto thin = detail::recognize_thin_spider(g)) return thin;
  // A thick spider's complement is a thin spider with legs and knees swapped.
  if (g.order() < 6) return std::nullopt;
  auto flipped = detail::recognize_thin_spider(complement(g));
  if (!flipped || flipped->legs.size() < 3) return std::nullopt;
  SpiderDecomposition sd;
  std::vector<std::size_t> idx(flipped->legs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return flipped->knees[a] < flipped->knees[b]; });
  for (std::size_t i : idx) {
    sd.legs.push_back(flipped->knees[i]);
    sd.knees.push_back(flipped->legs[i]);
  }
  sd.head = flipped->head;
  sd.thin = false;
  return sd;
}

}  // namespace fpf
