#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "prismfix/graph.hpp"
#include "prismfix/permutation.hpp"

namespace prismfix {

/// Largest order handled by the canonical labeller.
inline constexpr std::size_t kMaxCanonicalOrder = 10;

/// graph6 of a canonical relabelling: isomorphic graphs map to the same
/// string. Colour refinement by neighbour counts, then an exhaustive search
/// over orderings inside each colour class. Throws std::invalid_argument
/// above kMaxCanonicalOrder.
std::string canonical_graph6(const Graph& g);

/// One representative per isomorphism class of graphs on n vertices,
/// sorted by canonical graph6.
std::vector<Graph> all_graphs(std::size_t n);

bool is_connected(const Graph& g);

/// Erdős–Rényi G(n, p).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace prismfix
