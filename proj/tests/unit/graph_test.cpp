#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "prismfix/generate.hpp"
#include "prismfix/graph.hpp"

namespace prismfix {
namespace {

using families::complete;
using families::cycle;
using families::empty;
using families::path;
using families::star;

// Triangle plus a pendant vertex 3 attached at 0.
Graph paw() {
  const EdgeSet e{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  return Graph::from_edges(4, e);
}

TEST(VertexSet, SetAlgebraAndOrdering) {
  const VertexSet a{0, 2, 70};
  const VertexSet b{2, 3};
  EXPECT_EQ(a | b, (VertexSet{0, 2, 3, 70}));
  EXPECT_EQ(a & b, (VertexSet{2}));
  EXPECT_EQ(a - b, (VertexSet{0, 70}));
  EXPECT_EQ(b.complement(5), (VertexSet{0, 1, 4}));
  EXPECT_EQ(a.size(), 3U);
  EXPECT_EQ(a.first(), 0U);
  EXPECT_EQ(a.to_vector(), (std::vector<Vertex>{0, 2, 70}));
  EXPECT_TRUE(VertexSet{}.empty());
  EXPECT_EQ(VertexSet::range(130).size(), 130U);
  // Bit-pattern order: {0,1} = 0b011 < {2} = 0b100.
  EXPECT_LT((VertexSet{0, 1}), (VertexSet{2}));
  EXPECT_LT((VertexSet{5}), (VertexSet{64}));
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  const EdgeSet loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  const EdgeSet far{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, far), std::invalid_argument);
  std::vector<VertexSet> asym(2);
  asym[0].insert(1);
  EXPECT_THROW(Graph::from_adjacency(asym), std::invalid_argument);
  EXPECT_THROW(Graph(kMaxVertices + 1), std::invalid_argument);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const EdgeSet e{{0, 1}, {1, 0}, {0, 1}};
  const Graph g = Graph::from_edges(2, e);
  EXPECT_EQ(g.edge_count(), 1U);
}

TEST(Graph, Neighbourhoods) {
  const Graph c4 = cycle(4);
  EXPECT_EQ(open_nbhd(c4, 0), (VertexSet{1, 3}));
  EXPECT_EQ(closed_nbhd(c4, 0), (VertexSet{0, 1, 3}));
  EXPECT_EQ(open_nbhd(empty(5), 2), VertexSet{});
  EXPECT_EQ(closed_nbhd(empty(5), 2), (VertexSet{2}));
  EXPECT_EQ(closed_nbhd(complete(4), 1), (VertexSet{0, 1, 2, 3}));
  EXPECT_THROW(open_nbhd(c4, 4), std::out_of_range);
}

TEST(Graph, ClosedNeighbourhoodOfSet) {
  EXPECT_EQ(closed_nbhd_set(cycle(4), {0, 2}), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(closed_nbhd_set(cycle(4), {}), VertexSet{});
  EXPECT_EQ(closed_nbhd_set(path(4), {1}), (VertexSet{0, 1, 2}));
}

TEST(Graph, EdgesBetween) {
  const Graph c4 = cycle(4);
  EXPECT_TRUE(edges_between(c4, {0}, {2}).empty());
  EXPECT_EQ(edges_between(c4, {0}, {1, 3}), (EdgeSet{{0, 1}, {0, 3}}));
  EXPECT_EQ(edges_between(complete(3), {0, 1}, {0, 1}), (EdgeSet{{0, 1}}));
}

TEST(Graph, InducedSubgraph) {
  const auto sub = induced_subgraph(cycle(4), {0, 1, 3});
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(sub.graph.edges(), (EdgeSet{{0, 1}, {0, 2}}));
  EXPECT_TRUE(is_star(sub.graph));

  const Graph p = families::petersen();
  const auto whole = induced_subgraph(p, p.vertices());
  EXPECT_EQ(whole.graph, p);

  EXPECT_EQ(induced_subgraph(complete(4), {0, 2}).graph, complete(2));
}

TEST(Graph, C3FreeVertex) {
  EXPECT_FALSE(is_c3_free_vertex(complete(3), 0));
  EXPECT_TRUE(is_c3_free_vertex(star(3), 0));
  EXPECT_TRUE(is_c3_free_vertex(star(3), 2));
  EXPECT_FALSE(is_c3_free_vertex(empty(2), 0));
}

TEST(Graph, C3FreeVertexSet) {
  EXPECT_EQ(c3_free_vertices(cycle(5)), VertexSet::range(5));
  EXPECT_EQ(c3_free_vertices(complete(4)), VertexSet{});
  EXPECT_EQ(c3_free_vertices(paw()), (VertexSet{3}));
}

TEST(Graph, Girth) {
  EXPECT_EQ(girth(cycle(6)), Girth::finite(6));
  EXPECT_TRUE(girth(path(7)).is_infinite());
  EXPECT_TRUE(girth(star(4)).is_infinite());
  EXPECT_TRUE(girth(empty(3)).is_infinite());
  EXPECT_EQ(girth(families::petersen()), Girth::finite(5));
  EXPECT_EQ(girth(complete(4)), Girth::finite(3));
  EXPECT_EQ(girth(paw()), Girth::finite(3));
}

// Brute-force shortest cycle: smallest k such that some k vertices in some
// cyclic order are consecutively adjacent.
std::optional<std::size_t> brute_girth(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t k = 3; k <= n; ++k) {
    std::optional<std::size_t> hit;
    std::vector<Vertex> cyc(k);
    auto extend = [&](auto&& self, std::size_t depth) -> bool {
      if (depth == k) return g.adjacent(cyc[k - 1], cyc[0]);
      for (Vertex v : g.neighbors(cyc[depth - 1])) {
        if (v <= cyc[0]) continue;
        if (std::find(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(depth), v) !=
            cyc.begin() + static_cast<std::ptrdiff_t>(depth))
          continue;
        cyc[depth] = v;
        if (self(self, depth + 1)) return true;
      }
      return false;
    };
    for (Vertex s = 0; s < n; ++s) {
      cyc[0] = s;
      if (extend(extend, 1)) return k;
    }
  }
  return std::nullopt;
}

TEST(Graph, GirthMatchesBruteForceOnCorpus) {
  for (const auto& g : testing::corpus_up_to(7)) {
    const auto expected = brute_girth(g);
    const Girth got = girth(g);
    if (expected) {
      ASSERT_FALSE(got.is_infinite());
      EXPECT_EQ(got.length(), *expected);
    } else {
      EXPECT_TRUE(got.is_infinite());
    }
  }
  EXPECT_EQ(brute_girth(families::petersen()), 5U);
}

TEST(GraphProperty, GirthFourMakesEveryNonIsolatedVertexC3Free) {
  for (const auto& g : testing::corpus_up_to(8)) {
    if (!girth(g).at_least(4)) continue;
    VertexSet non_isolated;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) > 0) non_isolated.insert(v);
    EXPECT_EQ(c3_free_vertices(g), non_isolated);
  }
}

TEST(GraphProperty, C3FreeIffClosedNeighbourhoodIsStar) {
  std::mt19937_64 rng(7);
  std::vector<Graph> graphs = testing::corpus_up_to(7);
  for (int i = 0; i < 200; ++i) graphs.push_back(random_graph(12, 0.25, rng));
  for (const auto& g : graphs)
    for (Vertex x = 0; x < g.order(); ++x)
      EXPECT_EQ(is_c3_free_vertex(g, x), is_star(induced_subgraph(g, closed_nbhd(g, x)).graph));
}

TEST(GraphProperty, ConstructorsKeepSymmetry) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(20, 0.4, rng);
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.adjacent(v, u));
    }
  }
}

TEST(Graph, MultiWordSets) {
  // Vertices past the first machine word.
  const Graph c = cycle(150);
  EXPECT_EQ(open_nbhd(c, 149), (VertexSet{0, 148}));
  EXPECT_EQ(girth(c), Girth::finite(150));
  EXPECT_EQ(c3_free_vertices(c).size(), 150U);
}

}  // namespace
}  // namespace prismfix
