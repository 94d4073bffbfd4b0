#include <gtest/gtest.h>

#include <random>

#include "fpf/decomposition.hpp"
#include "fpf/engine.hpp"
#include "fpf/generators.hpp"
#include "support.hpp"

using namespace fpf;

namespace {

bool is_forest_tree(const Graph& g) { return g.size() + 1 == g.order() && connected_components(g).size() == 1; }

bool naive_tree_cograph(const Graph& g) {
  if (g.order() == 1 || is_forest_tree(g) || is_forest_tree(complement(g))) return true;
  auto parts = connected_components(g);
  if (parts.size() == 1) parts = connected_components(complement(g));
  if (parts.size() == 1) return false;
  return std::all_of(parts.begin(), parts.end(),
                     [&](const VertexSet& p) { return naive_tree_cograph(induced_subgraph(g, p).graph); });
}

/// Every five vertices induce at most one P4.
bool naive_p4_sparse(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 5) return true;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - 5, pick.end(), 1);
  do {
    VertexSet five;
    for (std::size_t v = 0; v < n; ++v) {
      if (pick[v]) five.push_back(static_cast<Vertex>(v));
    }
    int p4s = 0;
    for (std::size_t drop = 0; drop < 5; ++drop) {
      VertexSet four;
      for (std::size_t i = 0; i < 5; ++i) {
        if (i != drop) four.push_back(five[i]);
      }
      p4s += naive::has_induced_p4(induced_subgraph(g, four).graph);
    }
    if (p4s > 1) return false;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return true;
}

/// Largest prime quotient met while recursing through maximal strong modules.
std::size_t naive_modular_width(const Graph& g) {
  if (g.order() == 1) return 0;
  const auto parts = naive::maximal_strong_modules(g);
  std::size_t width = 0;
  const auto idx = ModularPartition{parts}.part_index(g.order());
  std::vector<Edge> qe;
  for (auto [u, v] : g.edges()) {
    if (idx[u] != idx[v]) qe.emplace_back(idx[u], idx[v]);
  }
  const Graph q = Graph::from_edge_list(parts.size(), qe);
  if (!q.is_complete() && !q.is_edgeless()) width = parts.size();
  for (const auto& p : parts) width = std::max(width, naive_modular_width(induced_subgraph(g, p).graph));
  return width;
}

}  // namespace

TEST(Generators, RandomTreesAreTrees) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 60; ++n) EXPECT_TRUE(is_forest_tree(random_tree(rng, n)));
  EXPECT_THROW(random_tree(rng, 0), std::invalid_argument);
}

TEST(Generators, CographsAreP4Free) {
  Rng rng(2);
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = random_cograph(rng, 1 + rep % 12);
    ASSERT_EQ(g.order(), 1u + rep % 12);
    ASSERT_FALSE(naive::has_induced_p4(g)) << to_graph6(g);
  }
}

TEST(Generators, TreeCographsFollowTheirGrammar) {
  Rng rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = random_tree_cograph(rng, 1 + rep % 20);
    ASSERT_TRUE(naive_tree_cograph(g)) << to_graph6(g);
  }
}

TEST(Generators, P4SparseGraphsAreP4Sparse) {
  Rng rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = random_p4_sparse(rng, 1 + rep % 11);
    ASSERT_TRUE(naive_p4_sparse(g)) << to_graph6(g);
  }
}

TEST(Generators, ModularWidthIsBounded) {
  Rng rng(5);
  for (int rep = 0; rep < 150; ++rep) {
    const std::size_t k = 2 + rep % 4;
    const Graph g = random_bounded_modular_width(rng, 1 + rep % 11, k);
    ASSERT_LE(naive_modular_width(g), k) << to_graph6(g);
  }
}

TEST(Generators, SameSeedSameGraph) {
  Rng a(7);
  Rng b(7);
  EXPECT_EQ(random_p4_sparse(a, 300), random_p4_sparse(b, 300));
  EXPECT_EQ(random_gnp(a, 30, 0.3), random_gnp(b, 30, 0.3));
}

TEST(Generators, DenseBlockKeepsGraphsSparse) {
  Rng rng(8);
  const GeneratorLimits lim{16};
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 20000;
    EXPECT_LE(random_cograph(rng, n, lim).size(), 16 * n);
    EXPECT_LE(random_p4_sparse(rng, n, lim).size(), 16 * n);
    EXPECT_LE(random_tree_cograph(rng, n, lim).size(), 16 * n);
  }
}

TEST(Generators, QuotientsStayInsideTheClasses) {
  // Random P4-sparse graphs produce spider quotients both with and without a head.
  Rng rng(9);
  std::size_t cyclops = 0;
  std::size_t headless = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = random_p4_sparse(rng, 5 + rep % 60);
    const DecompositionTree tree(g, 0);
    for (const auto& nd : tree.nodes()) {
      if (nd.leaf) continue;
      ASSERT_NE(nd.tag, QuotientClassTag::SmallPrime);
      ASSERT_NE(nd.tag, QuotientClassTag::Unsupported);
      if (nd.tag == QuotientClassTag::Spider) ++(nd.spider->head.empty() ? headless : cyclops);
    }
    const Graph t = random_tree_cograph(rng, 5 + rep % 60);
    for (const auto& nd : DecompositionTree(t, 0).nodes()) {
      if (nd.leaf) continue;
      ASSERT_TRUE(nd.tag == QuotientClassTag::Complete || nd.tag == QuotientClassTag::Edgeless ||
                  nd.tag == QuotientClassTag::Tree || nd.tag == QuotientClassTag::CoTree ||
                  nd.tag == QuotientClassTag::Spider);
    }
  }
  EXPECT_GT(cyclops, 0u);
  EXPECT_GT(headless, 0u);
}
