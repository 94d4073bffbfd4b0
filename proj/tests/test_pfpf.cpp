#include <gtest/gtest.h>

#include <random>

#include "fpf/generators.hpp"
#include "fpf/pfpf.hpp"
#include "fpf/spider.hpp"
#include "support.hpp"

using namespace fpf;
using shapes::cycle;
using shapes::path;

namespace {

/// Legs 0..t-1, knees t..2t-1 with leg i on knee t+i, then the head.
Graph spider(std::size_t t, bool thin, bool head) {
  std::vector<Edge> e;
  const auto k = static_cast<Vertex>(t);
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = 0; j < k; ++j) {
      if (i < j) e.emplace_back(k + i, k + j);
      if ((i == j) == thin) e.emplace_back(i, k + j);
    }
    if (head) e.emplace_back(2 * k, k + i);
  }
  return Graph::from_edge_list(2 * t + (head ? 1 : 0), e);
}

PfpfInstance instance(const Graph& g, std::vector<int> colors, std::vector<bool> mask, Mode mode) {
  return {g, VertexColoring(colors), BooleanMask(std::move(mask)), mode};
}

PfpfInstance uniform(const Graph& g, Mode mode = Mode::automorphism) {
  return {g, VertexColoring::uniform(g.order()), BooleanMask::all(g.order(), false), mode};
}

PfpfInstance random_instance(std::mt19937_64& rng, const Graph& g) {
  const int k = 1 + static_cast<int>(rng() % 3);
  std::vector<int> colors(g.order());
  std::vector<bool> mask(g.order());
  const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  for (std::size_t v = 0; v < g.order(); ++v) {
    colors[v] = static_cast<int>(rng() % k);
    mask[v] = std::bernoulli_distribution(p)(rng);
  }
  return instance(g, colors, mask, rng() % 2 ? Mode::involution : Mode::automorphism);
}

bool naive_answer(const PfpfInstance& inst) {
  const auto c = inst.coloring.values();
  std::vector<bool> allowed;
  for (std::size_t v = 0; v < inst.mask.size(); ++v) allowed.push_back(inst.mask[v]);
  return naive::pfpf_exists(inst.graph, std::vector<int>(c.begin(), c.end()), allowed,
                            inst.mode == Mode::involution);
}

template <class Solver>
void check_against_naive(const PfpfInstance& inst, Solver&& solve) {
  const auto w = solve(inst);
  ASSERT_EQ(w.has_value(), naive_answer(inst)) << to_graph6(inst.graph);
  if (w) { ASSERT_TRUE(is_pfpf_witness(inst, *w)) << to_graph6(inst.graph); }
}

Graph shuffled(std::mt19937_64& rng, const Graph& g) { return relabel(g, naive::random_permutation(rng, g.order())); }

}  // namespace

TEST(PfpfComplete, Examples) {
  const auto k3 = pfpf_complete_or_empty(uniform(Graph::complete(3)));
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->cycles().size(), 1u);
  EXPECT_EQ(k3->order(), 3u);

  EXPECT_FALSE(pfpf_complete_or_empty(instance(Graph::complete(2), {0, 1}, {false, false}, Mode::automorphism)));
  EXPECT_FALSE(pfpf_complete_or_empty(uniform(Graph::complete(3), Mode::involution)));
  EXPECT_THROW(pfpf_complete_or_empty(uniform(path(3))), std::invalid_argument);
}

TEST(PfpfComplete, InvolutionParityRule) {
  // One allowed vertex per odd class suffices; an odd class without one fails.
  const auto ok = instance(Graph::empty(5), {0, 0, 0, 1, 1}, {false, true, false, false, false}, Mode::involution);
  const auto w = pfpf_complete_or_empty(ok);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_pfpf_witness(ok, *w));
  EXPECT_EQ(w->fixed_points(), (std::vector<Vertex>{1}));
  EXPECT_FALSE(pfpf_complete_or_empty(
      instance(Graph::empty(5), {0, 0, 0, 1, 1}, {false, false, false, true, true}, Mode::involution)));
}

TEST(PfpfComplete, AgreesWithNaive) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t n = 1 + rep % 8;
    const Graph g = rep % 2 ? Graph::complete(n) : Graph::empty(n);
    check_against_naive(random_instance(rng, g), [](const auto& i) { return pfpf_complete_or_empty(i); });
  }
}

TEST(PfpfTree, Examples) {
  EXPECT_FALSE(pfpf_tree(uniform(path(3))));
  const auto w = pfpf_tree(instance(path(3), {0, 0, 0}, {false, true, false}, Mode::automorphism));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->to_cycle_string(), "(0 2)");
  EXPECT_THROW(pfpf_tree(uniform(cycle(4))), std::invalid_argument);
}

TEST(PfpfTree, TwoCentersSwapOrFixBoth) {
  // P4 with both centers allowed: fixing the centers leaves the leaves
  // unmovable, yet the reversal swaps the halves.
  const auto inst = instance(path(4), {0, 0, 0, 0}, {false, true, true, false}, Mode::automorphism);
  EXPECT_TRUE(naive_answer(inst));
  const auto w = pfpf_tree(inst);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->to_cycle_string(), "(0 3)(1 2)");

  // Double star with distinguishable halves: both centers fixed, leaves swapped.
  const Graph ds = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
  const auto fixed = instance(ds, {0, 1, 1, 0, 2, 2}, {true, false, false, true, false, false}, Mode::involution);
  const auto v = pfpf_tree(fixed);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->to_cycle_string(), "(1 2)(4 5)");
}

TEST(PfpfTree, AgreesWithNaive) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 3000; ++rep) {
    const Graph t = random_tree(rng, 1 + rep % 9);
    check_against_naive(random_instance(rng, t), [](const auto& i) { return pfpf_tree(i); });
  }
}

TEST(PfpfTree, RootedModeFixesTheRoot) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 1500; ++rep) {
    const Graph t = random_tree(rng, 1 + rep % 8);
    auto inst = random_instance(rng, t);
    const auto root = static_cast<Vertex>(rng() % t.order());
    // A private color on the root makes the naive search keep it in place.
    std::vector<int> colors(inst.coloring.values().begin(), inst.coloring.values().end());
    colors[root] = -1;
    std::vector<bool> allowed;
    for (std::size_t v = 0; v < t.order(); ++v) allowed.push_back(inst.mask[v]);
    const bool expected = naive::pfpf_exists(t, colors, allowed, inst.mode == Mode::involution);
    const auto w = pfpf_tree(inst, root);
    ASSERT_EQ(w.has_value(), expected) << to_graph6(t);
    if (w) {
      ASSERT_TRUE(is_pfpf_witness(inst, *w));
      ASSERT_EQ((*w)(root), root);
    }
  }
}

TEST(PfpfCoTree, Examples) {
  // complement(P3) is K2 plus an isolated vertex; its co-center is vertex 1.
  const Graph cp3 = complement(path(3));
  const auto a = instance(cp3, {0, 0, 0}, {false, true, false}, Mode::automorphism);
  const auto b = instance(path(3), {0, 0, 0}, {false, true, false}, Mode::automorphism);
  EXPECT_EQ(pfpf_co_tree(a), pfpf_tree(b));

  const Graph cp4 = complement(path(4));
  EXPECT_TRUE(naive::isomorphic(cp4, path(4)));
  EXPECT_EQ(pfpf_co_tree(uniform(cp4)).has_value(), pfpf_tree(uniform(path(4))).has_value());

  const auto all = instance(cp4, {0, 1, 2, 3}, {true, true, true, true}, Mode::automorphism);
  const auto id = pfpf_co_tree(all);
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, Permutation::identity(4));
  EXPECT_THROW(pfpf_co_tree(uniform(path(5))), std::invalid_argument);
}

TEST(PfpfCoTree, AgreesWithNaive) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 2000; ++rep) {
    const Graph t = complement(random_tree(rng, 1 + rep % 8));
    check_against_naive(random_instance(rng, t), [](const auto& i) { return pfpf_co_tree(i); });
  }
}

TEST(Spider, RecognizesTheEightLeggedCyclops) {
  const Graph g = spider(8, true, true);
  const auto sd = recognize_spider(g);
  ASSERT_TRUE(sd);
  EXPECT_EQ(sd->legs_count(), 8u);
  EXPECT_EQ(sd->head, VertexSet{16});
  EXPECT_TRUE(sd->thin);
  EXPECT_TRUE(is_valid_spider(g, *sd));
}

TEST(Spider, P4IsAHeadlessThinSpider) {
  const auto sd = recognize_spider(path(4));
  ASSERT_TRUE(sd);
  EXPECT_EQ(sd->legs_count(), 2u);
  EXPECT_TRUE(sd->head.empty());
  EXPECT_TRUE(sd->thin);
  EXPECT_EQ(sd->legs, (VertexSet{0, 3}));
  EXPECT_EQ(sd->knees, (VertexSet{1, 2}));
}

TEST(Spider, RecognitionMatchesAxiomEnumeration) {
  // Assign each vertex to legs, knees or head and try every bijection.
  auto brute = [](const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> role(n, 0);
    for (;;) {
      VertexSet s;
      VertexSet k;
      VertexSet r;
      for (std::size_t v = 0; v < n; ++v) (role[v] == 0 ? s : role[v] == 1 ? k : r).push_back(static_cast<Vertex>(v));
      if (s.size() == k.size() && s.size() >= 2 && r.size() <= 1) {
        bool base = true;
        for (Vertex a : s)
          for (Vertex b : s) base = base && !g.adjacent(a, b);
        for (Vertex a : k)
          for (Vertex b : k) base = base && (a == b || g.adjacent(a, b));
        for (Vertex h : r) {
          for (Vertex a : k) base = base && g.adjacent(h, a);
          for (Vertex a : s) base = base && !g.adjacent(h, a);
        }
        if (base) {
          VertexSet f = k;
          do {
            for (int thin = 0; thin < 2; ++thin) {
              bool ok = true;
              for (std::size_t i = 0; i < s.size(); ++i) {
                for (std::size_t j = 0; j < k.size(); ++j) ok = ok && g.adjacent(s[i], f[j]) == ((f[j] == f[i]) == (thin == 1));
              }
              if (ok) return true;
            }
          } while (std::next_permutation(f.begin(), f.end()));
        }
      }
      std::size_t i = 0;
      while (i < n && role[i] == 2) role[i++] = 0;
      if (i == n) return false;
      ++role[i];
    }
  };
  EXPECT_FALSE(brute(cycle(5)));
  EXPECT_FALSE(recognize_spider(cycle(5)));
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t t = 2 + rep % 3;
    Graph g = rep % 3 == 0 ? naive::random_graph(rng, 4 + rep % 4, 0.5) : shuffled(rng, spider(t, rep % 2, rep % 5 < 3));
    const auto sd = recognize_spider(g);
    ASSERT_EQ(sd.has_value(), brute(g)) << to_graph6(g);
    if (sd) { ASSERT_TRUE(is_valid_spider(g, *sd)); }
  }
}

TEST(PfpfSpider, Examples) {
  const Graph g = spider(2, true, true);
  auto inst = instance(g, {0, 0, 0, 0, 0}, {false, false, false, false, true}, Mode::automorphism);
  const auto sd = recognize_spider(g);
  ASSERT_TRUE(sd);
  const auto w = pfpf_spider(inst, *sd);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->to_cycle_string(), "(0 1)(2 3)");

  inst.mask = BooleanMask::all(5, false);
  EXPECT_FALSE(pfpf_spider(inst, *sd));

  SpiderDecomposition wrong = *sd;
  std::swap(wrong.legs, wrong.knees);
  EXPECT_THROW(pfpf_spider(inst, wrong), std::invalid_argument);
}

TEST(PfpfSpider, AgreesWithNaive) {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 3000; ++rep) {
    const std::size_t t = 2 + rep % 3;
    const Graph g = shuffled(rng, spider(t, rep % 2, rep % 4 != 0));
    const auto sd = recognize_spider(g);
    ASSERT_TRUE(sd);
    check_against_naive(random_instance(rng, g), [&](const auto& i) { return pfpf_spider(i, *sd); });
  }
}

TEST(PfpfBruteforce, Examples) {
  const auto c5 = pfpf_bruteforce(uniform(cycle(5)));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->to_cycle_string(), "(0 1 2 3 4)");
  EXPECT_FALSE(pfpf_bruteforce(uniform(cycle(5), Mode::involution)));
  EXPECT_FALSE(pfpf_bruteforce(uniform(Graph::empty(1))));
  const auto k1 = pfpf_bruteforce(instance(Graph::empty(1), {0}, {true}, Mode::automorphism));
  ASSERT_TRUE(k1);
  EXPECT_EQ(*k1, Permutation::identity(1));
  EXPECT_THROW(pfpf_bruteforce(uniform(cycle(11))), CapExceeded);
  EXPECT_THROW(pfpf_bruteforce(uniform(Graph::empty(0))), std::invalid_argument);
}

TEST(PfpfBruteforce, ReturnsTheLexicographicallyFirstWitness) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 1500; ++rep) {
    const Graph g = naive::random_graph(rng, 1 + rep % 7, 0.5);
    const auto inst = random_instance(rng, g);
    std::optional<std::vector<Vertex>> first;
    naive::for_each_automorphism(g, [&](const std::vector<Vertex>& p) {
      if (!is_pfpf_witness(inst, Permutation(p))) return false;
      first = p;
      return true;
    });
    const auto w = pfpf_bruteforce(inst);
    ASSERT_EQ(w.has_value(), first.has_value());
    if (w) { ASSERT_EQ(std::vector<Vertex>(w->images().begin(), w->images().end()), *first); }
  }
}

TEST(PfpfProperties, InvolutionImpliesAutomorphismAndComplementDuality) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 1000; ++rep) {
    const Graph g = naive::random_graph(rng, 1 + rep % 7, 0.5);
    auto inst = random_instance(rng, g);
    inst.mode = Mode::involution;
    const bool inv = pfpf_bruteforce(inst).has_value();
    inst.mode = Mode::automorphism;
    const bool aut = pfpf_bruteforce(inst).has_value();
    ASSERT_TRUE(!inv || aut);
    for (Mode m : {Mode::automorphism, Mode::involution}) {
      inst.mode = m;
      PfpfInstance co{complement(g), inst.coloring, inst.mask, m};
      ASSERT_EQ(pfpf_bruteforce(inst).has_value(), pfpf_bruteforce(co).has_value());
    }
  }
}

TEST(PfpfInstance, SizeMismatchIsRejected) {
  const PfpfInstance bad{path(3), VertexColoring::uniform(2), BooleanMask::all(3, false), Mode::automorphism};
  EXPECT_THROW(check_instance(bad), std::invalid_argument);
}
