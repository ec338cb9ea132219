#pragma once

#include <cstddef>
#include <vector>

#include "prismfix/graph.hpp"

namespace prismfix {

struct GammaResult {
  std::size_t gamma = 0;
  VertexSet witness;
};

/// N[D] = V.
bool is_dominating(const Graph& g, const VertexSet& d);

/// The relation D ≻ A: every vertex of A has a neighbour in D. Open
/// domination, so a vertex of D does not cover itself.
bool dominates(const Graph& g, const VertexSet& d, const VertexSet& a);

/// Exact domination number by iterative-deepening branch and bound.
GammaResult domination_number(const Graph& g);

/// Largest order accepted by the subset-scan oracle.
inline constexpr std::size_t kNaiveOracleMaxOrder = 20;

/// Reference oracle: scans subsets by increasing cardinality. Throws
/// GuardError when g.order() > kNaiveOracleMaxOrder.
GammaResult naive_domination_number(const Graph& g);

/// All dominating sets of size gamma(g), ascending by bit pattern.
std::vector<VertexSet> enumerate_gamma_sets(const Graph& g);
/// Same, with gamma already known.
std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, std::size_t gamma);

bool is_independent(const Graph& g, const VertexSet& s);

/// Members have pairwise disjoint closed neighbourhoods.
bool is_2_packing(const Graph& g, const VertexSet& s);

/**
 * Visits every k-subset of {0..n-1} in ascending bit-pattern order
 * (colexicographic order of the sorted member lists). The visitor returns
 * false to stop early.
 */
template <typename Visitor>
void for_each_k_subset(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (Vertex v : idx) s.insert(v);
    if (!visit(s)) return;
    std::size_t j = 0;
    while (j < k && idx[j] + 1 == (j + 1 < k ? idx[j + 1] : n)) ++j;
    if (j == k) return;
    ++idx[j];
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  }
}

}  // namespace prismfix
