#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "prismfix/domination.hpp"
#include "prismfix/errors.hpp"
#include "prismfix/generate.hpp"

namespace prismfix {
namespace {

using families::complete;
using families::cycle;
using families::empty;
using families::path;
using families::star;

TEST(Domination, IsDominating) {
  EXPECT_TRUE(is_dominating(cycle(4), {0, 2}));
  EXPECT_FALSE(is_dominating(cycle(4), {0}));
  EXPECT_TRUE(is_dominating(families::petersen(), VertexSet::range(10)));
}

TEST(Domination, OpenDominationRelation) {
  EXPECT_TRUE(dominates(cycle(4), {0}, {1, 3}));
  EXPECT_FALSE(dominates(cycle(4), {0}, {0}));
  EXPECT_TRUE(dominates(path(3), {}, {}));
}

TEST(Domination, DominationNumberExamples) {
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(domination_number(empty(n)).gamma, n);
  EXPECT_EQ(domination_number(path(4)).gamma, 2U);
  EXPECT_EQ(domination_number(families::petersen()).gamma, 3U);
  EXPECT_EQ(domination_number(complete(7)).gamma, 1U);
  EXPECT_EQ(domination_number(cycle(9)).gamma, 3U);
}

TEST(Domination, NaiveOracleExamples) {
  EXPECT_EQ(naive_domination_number(cycle(4)).gamma, 2U);
  EXPECT_EQ(naive_domination_number(complete(4)).gamma, 1U);
  EXPECT_EQ(naive_domination_number(cycle(7)).gamma, 3U);
  EXPECT_EQ(naive_domination_number(Graph(0)).gamma, 0U);
  EXPECT_THROW(naive_domination_number(cycle(21)), GuardError);
}

TEST(Domination, WitnessIsDominating) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(14, 0.2, rng);
    const auto r = domination_number(g);
    EXPECT_TRUE(is_dominating(g, r.witness));
    EXPECT_EQ(r.witness.size(), r.gamma);
  }
}

TEST(Domination, MultiWordPathAgreesWithFormula) {
  // gamma(P_n) = gamma(C_n) = ceil(n / 3)
  EXPECT_EQ(domination_number(path(70)).gamma, 24U);
  EXPECT_EQ(domination_number(cycle(66)).gamma, 22U);
  EXPECT_EQ(domination_number(empty(65)).gamma, 65U);
}

TEST(Domination, EnumerateGammaSets) {
  const auto c4 = enumerate_gamma_sets(cycle(4));
  ASSERT_EQ(c4.size(), 6U);
  const std::vector<VertexSet> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(c4, expected);
  EXPECT_EQ(enumerate_gamma_sets(star(3)), (std::vector<VertexSet>{{0}}));
  EXPECT_EQ(enumerate_gamma_sets(empty(2)), (std::vector<VertexSet>{{0, 1}}));
  EXPECT_EQ(enumerate_gamma_sets(path(6)), (std::vector<VertexSet>{{1, 4}}));
}

TEST(Domination, KSubsetsInBitPatternOrder) {
  std::vector<VertexSet> seen;
  for_each_k_subset(5, 2, [&](const VertexSet& s) {
    seen.push_back(s);
    return true;
  });
  ASSERT_EQ(seen.size(), 10U);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  std::size_t count = 0;
  for_each_k_subset(3, 0, [&](const VertexSet& s) {
    EXPECT_TRUE(s.empty());
    ++count;
    return true;
  });
  EXPECT_EQ(count, 1U);
}

TEST(Domination, IndependenceAndPacking) {
  EXPECT_TRUE(is_independent(cycle(4), {0, 2}));
  EXPECT_FALSE(is_independent(cycle(4), {0, 1}));
  EXPECT_TRUE(is_independent(complete(5), {3}));
  EXPECT_TRUE(is_independent(complete(5), {}));

  EXPECT_TRUE(is_2_packing(cycle(6), {0, 3}));
  EXPECT_FALSE(is_2_packing(cycle(4), {0, 2}));
  EXPECT_TRUE(is_2_packing(complete(4), {2}));
}

TEST(DominationProperty, BranchAndBoundMatchesOracleOnCorpus) {
  for (const auto& g : testing::corpus_up_to(8)) EXPECT_EQ(domination_number(g).gamma, naive_domination_number(g).gamma);
  for (const auto& g : testing::named_graphs()) EXPECT_EQ(domination_number(g).gamma, naive_domination_number(g).gamma);
}

TEST(DominationProperty, GammaSetsAreCompleteAndContainWitness) {
  for (const auto& g : testing::corpus_up_to(6)) {
    const auto r = domination_number(g);
    const auto sets = enumerate_gamma_sets(g, r.gamma);
    ASSERT_FALSE(sets.empty());
    EXPECT_NE(std::find(sets.begin(), sets.end(), r.witness), sets.end());
    // Brute-force count over all subsets.
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      VertexSet s;
      s.set_word(0, m);
      if (s.size() == r.gamma && is_dominating(g, s)) ++count;
    }
    EXPECT_EQ(sets.size(), count);
    for (const auto& s : sets) EXPECT_TRUE(is_dominating(g, s));
  }
}

TEST(DominationProperty, PackingImpliesIndependent) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(10, 0.3, rng);
    VertexSet s;
    s.set_word(0, rng() & ((1U << 10) - 1));
    if (is_2_packing(g, s)) EXPECT_TRUE(is_independent(g, s));
  }
}

TEST(DominationProperty, AddingAnEdgeNeverIncreasesGamma) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(10, 0.3, rng);
    const auto before = naive_domination_number(g).gamma;
    EdgeSet edges = g.edges();
    const Vertex u = rng() % 10;
    const Vertex v = rng() % 10;
    if (u == v) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    const Graph h = Graph::from_edges(10, edges);
    EXPECT_LE(domination_number(h).gamma, before);
  }
}

}  // namespace
}  // namespace prismfix
