#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fpf/engine.hpp"
#include "fpf/generators.hpp"
#include "fpf/oracle.hpp"
#include "support.hpp"

using namespace fpf;
using shapes::cycle;
using shapes::path;
using shapes::star;

TEST(Engine, Examples) {
  const auto p4 = has_fpf_automorphism(path(4));
  ASSERT_TRUE(p4.decision);
  EXPECT_EQ(p4.witness->to_cycle_string(), "(0 3)(1 2)");

  EXPECT_FALSE(has_fpf_automorphism(Graph::empty(1)).decision);
  EXPECT_FALSE(naive::fpf_aut_exists(star(3)));
  EXPECT_FALSE(has_fpf_automorphism(star(3)).decision);

  const auto c4 = has_fpf_involution(cycle(4));
  ASSERT_TRUE(c4.decision);
  EXPECT_TRUE(verify_result(cycle(4), Mode::involution, c4));
  EXPECT_FALSE(naive::fpf_inv_exists(cycle(5)));
  EXPECT_FALSE(has_fpf_involution(cycle(5)).decision);
  EXPECT_FALSE(naive::fpf_inv_exists(Graph::complete(3)));
  EXPECT_FALSE(has_fpf_involution(Graph::complete(3)).decision);
  EXPECT_TRUE(has_fpf_automorphism(Graph::complete(3)).decision);
  EXPECT_THROW(has_fpf_automorphism(Graph::empty(0)), std::invalid_argument);
}

TEST(Engine, VerifyResultExamples) {
  const Graph p4 = path(4);
  EXPECT_TRUE(verify_result(p4, Mode::automorphism, {true, Permutation::parse_cycles("(0 3)(1 2)", 4), {}, 0}));
  EXPECT_FALSE(verify_result(p4, Mode::automorphism, {true, Permutation::identity(4), {}, 0}));
  EXPECT_FALSE(verify_result(cycle(5), Mode::involution, {true, Permutation::parse_cycles("(0 1 2 3 4)", 5), {}, 0}));
  EXPECT_TRUE(verify_result(cycle(5), Mode::automorphism, {true, Permutation::parse_cycles("(0 1 2 3 4)", 5), {}, 0}));
  EXPECT_FALSE(verify_result(p4, Mode::automorphism, {true, std::nullopt, {}, 0}));
  EXPECT_TRUE(verify_result(p4, Mode::automorphism, {false, std::nullopt, {}, 0}));
}

TEST(Engine, SmallCorpusMatchesNaiveEnumeration) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : naive::corpus(n)) {
      for (Mode mode : {Mode::automorphism, Mode::involution}) {
        const auto r = solve(g, mode);
        const bool expected = mode == Mode::automorphism ? naive::fpf_aut_exists(g) : naive::fpf_inv_exists(g);
        ASSERT_EQ(r.decision, expected) << to_graph6(g);
        ASSERT_TRUE(verify_result(g, mode, r)) << to_graph6(g);
      }
    }
  }
}

TEST(Engine, WitnessesPermuteMaximalStrongModules) {
  std::mt19937_64 rng(1);
  int checked = 0;
  for (int rep = 0; rep < 600; ++rep) {
    const Graph g = naive::random_graph(rng, 2 + rep % 7, rep % 3 ? 0.5 : 0.25);
    const auto modules = naive::maximal_strong_modules(g);
    const std::set<VertexSet> as_set(modules.begin(), modules.end());
    for (Mode mode : {Mode::automorphism, Mode::involution}) {
      const auto r = solve(g, mode);
      if (!r.decision) continue;
      ++checked;
      for (const auto& m : modules) {
        VertexSet image;
        for (Vertex v : m) image.push_back((*r.witness)(v));
        std::sort(image.begin(), image.end());
        ASSERT_TRUE(as_set.count(image)) << to_graph6(g);
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Engine, RecursionIsLinear) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rep % 80;
    const Graph g = rep % 2 ? random_p4_sparse(rng, n) : random_tree_cograph(rng, n);
    const auto r = solve(g, rep % 4 < 2 ? Mode::automorphism : Mode::involution);
    ASSERT_LE(r.recursive_calls, 2 * n - 1);
  }
}

TEST(Engine, RepeatedModulesAreSolvedOnce) {
  std::vector<Edge> e;
  for (Vertex c = 0; c < 10; ++c) {
    for (Vertex i = 0; i < 3; ++i) e.emplace_back(4 * c + i, 4 * c + i + 1);
  }
  const Graph ten_p4 = Graph::from_edge_list(40, e);
  const auto r = has_fpf_automorphism(ten_p4);
  EXPECT_TRUE(r.decision);
  EXPECT_EQ(r.recursive_calls, 2u);
}

TEST(Engine, CyclesAndPetersen) {
  for (std::size_t n = 2; n <= 14; ++n) {
    EngineOptions opts;
    opts.prime_cap = std::max<std::size_t>(n, kDefaultBruteForceCap);
    const auto aut = solve(cycle(n), Mode::automorphism, opts);
    EXPECT_TRUE(aut.decision) << n;
    EXPECT_TRUE(verify_result(cycle(n), Mode::automorphism, aut));
    const auto inv = solve(cycle(n), Mode::involution, opts);
    EXPECT_EQ(inv.decision, n % 2 == 0) << n;
    EXPECT_TRUE(verify_result(cycle(n), Mode::involution, inv));
  }
  const Graph pg = shapes::petersen();
  const auto pa = has_fpf_automorphism(pg);
  EXPECT_TRUE(pa.decision);
  EXPECT_TRUE(verify_result(pg, Mode::automorphism, pa));
  const auto pi = has_fpf_involution(pg);
  EXPECT_EQ(pi.decision, oracle_fpf_inv(pg, 10).has_value());
  EXPECT_TRUE(verify_result(pg, Mode::involution, pi));
}

TEST(Engine, LargePrimeQuotientIsUnsupported) {
  EXPECT_THROW(has_fpf_automorphism(cycle(12)), UnsupportedQuotient);
  EngineOptions opts;
  opts.prime_cap = 12;
  EXPECT_TRUE(solve(cycle(12), Mode::automorphism, opts).decision);
}

TEST(Engine, ClassMembersMatchOracle) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 1500; ++rep) {
    const std::size_t n = 1 + rep % 9;
    Graph g;
    switch (rep % 4) {
      case 0: g = random_cograph(rng, n); break;
      case 1: g = random_tree_cograph(rng, n); break;
      case 2: g = random_p4_sparse(rng, n); break;
      default: g = random_bounded_modular_width(rng, n, 4); break;
    }
    for (Mode mode : {Mode::automorphism, Mode::involution}) {
      const auto r = solve(g, mode);
      const auto o = mode == Mode::automorphism ? oracle_fpf_aut(g) : oracle_fpf_inv(g);
      ASSERT_EQ(r.decision, o.has_value()) << to_graph6(g);
      ASSERT_TRUE(verify_result(g, mode, r)) << to_graph6(g);
    }
  }
}

TEST(Engine, LargeClassMembersCertify) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 90; ++rep) {
    const std::size_t n = 50 + rng() % 151;
    const Graph g = rep % 3 == 0 ? random_cograph(rng, n) : rep % 3 == 1 ? random_tree_cograph(rng, n) : random_p4_sparse(rng, n);
    for (Mode mode : {Mode::automorphism, Mode::involution}) ASSERT_TRUE(verify_result(g, mode, solve(g, mode)));
  }
}

TEST(Engine, TraceCoversEveryModule) {
  const Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}});
  EngineOptions opts;
  opts.trace = true;
  const auto r = solve(g, Mode::automorphism, opts);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.back().module, (VertexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(r.trace.back().decision, r.decision);
  EXPECT_EQ(r.trace.back().tag, QuotientClassTag::Edgeless);
  EXPECT_TRUE(solve(g, Mode::automorphism).trace.empty());

  opts.trace = false;
  opts.witness = false;
  const auto bare = solve(path(4), Mode::automorphism, opts);
  EXPECT_TRUE(bare.decision);
  EXPECT_FALSE(bare.witness);
}
