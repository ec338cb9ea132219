#pragma once

#include <optional>
#include <span>
#include <vector>

#include "prismfix/graph.hpp"
#include "prismfix/permutation.hpp"

namespace prismfix {

/**
 * A gamma-set A split into nonempty parts A1, A2 with A1 ≻ V - A.
 *
 * The split is ordered: A1 is the part that dominates the outside, so
 * (A1, A2) and (A2, A1) are distinct records.
 */
struct SeparableGammaSet {
  VertexSet a;
  VertexSet a1;
  VertexSet a2;

  friend bool operator==(const SeparableGammaSet&, const SeparableGammaSet&) = default;
};

/// Every separable gamma-set of g, gamma-sets ascending by bit pattern and,
/// within each, A1 ascending by bit pattern.
std::vector<SeparableGammaSet> enumerate_separable(const Graph& g);
/// Same, from a precomputed list of gamma-sets.
std::vector<SeparableGammaSet> enumerate_separable(const Graph& g, std::span<const VertexSet> gamma_sets);

/// The three structural facts every separable gamma-set must satisfy,
/// each computed directly from the graph.
struct Lemma1Report {
  bool a2_independent = false;
  bool no_cross_edges = false;
  bool a2_is_2_packing = false;

  bool all() const { return a2_independent && no_cross_edges && a2_is_2_packing; }
  friend bool operator==(const Lemma1Report&, const Lemma1Report&) = default;
};

Lemma1Report lemma1_check(const Graph& g, const SeparableGammaSet& sep);

/// Images of a separable set under π, read in the copy G' (which shares
/// g's index space).
struct EffectiveWitness {
  SeparableGammaSet sep;
  VertexSet b1;
  VertexSet b2;
};

/// Witness if π(A) is a π(A2)-separable gamma-set of the copy, i.e.
/// π(A) dominates, both images are nonempty and π(A2) ≻ V - π(A).
/// Throws std::invalid_argument if pi.size() != g.order().
std::optional<EffectiveWitness> effective_witness(const Graph& g, const SeparableGammaSet& sep,
                                                  const Permutation& pi);

bool is_effective(const Graph& g, const SeparableGammaSet& sep, const Permutation& pi);

/// First effective record in enumeration order, if any.
std::optional<EffectiveWitness> exists_effective(const Graph& g, const Permutation& pi);
std::optional<EffectiveWitness> exists_effective(const Graph& g, std::span<const SeparableGammaSet> records,
                                                 const Permutation& pi);

}  // namespace prismfix
