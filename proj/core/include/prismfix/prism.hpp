#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prismfix/graph.hpp"
#include "prismfix/permutation.hpp"
#include "prismfix/separable.hpp"

namespace prismfix {

/**
 * The prism πG: g on vertices 0..n-1, a copy of g on n..2n-1 (the copy of
 * v is v+n), and the matching {v, π(v)+n}.
 */
class PrismGraph {
 public:
  const Graph& graph() const { return graph_; }
  std::size_t base_order() const { return n_; }
  Vertex copy_of(Vertex v) const { return v + n_; }
  const Permutation& permutation() const { return pi_; }

 private:
  friend PrismGraph build_prism(const Graph& g, const Permutation& pi);
  Graph graph_;
  std::size_t n_ = 0;
  Permutation pi_;
};

/// Throws std::invalid_argument if pi.size() != g.order().
PrismGraph build_prism(const Graph& g, const Permutation& pi);

/// Exact domination number of πG.
std::size_t prism_gamma(const Graph& g, const Permutation& pi);

/**
 * Canonical permutation that derails every separable gamma-set for a C3-free
 * vertex x: it fixes every vertex outside X = N[x] and rotates the sorted
 * members of X one step (x0 -> x1 -> ... -> xm -> x0). Throws
 * NotC3FreeError if x is isolated or on a triangle.
 */
Permutation adversary_permutation(const Graph& g, Vertex x);

/// A uniformly random permutation meeting the same three conditions as the
/// canonical one, drawn from a seeded generator.
Permutation random_adversary_permutation(const Graph& g, Vertex x, std::uint64_t seed);

/// The three conditions on the adversary, checked independently of how the
/// permutation was built.
struct AdversaryConditions {
  bool fixes_outside = false;       // π(v) = v for v outside X
  bool no_fixed_point_inside = false;
  bool no_two_cycle_inside = false;  // only required when |X| >= 3

  bool all() const { return fixes_outside && no_fixed_point_inside && no_two_cycle_inside; }
};

AdversaryConditions check_adversary_conditions(const Graph& g, Vertex x, const Permutation& pi);

enum class FailureTag { Case1_1, Case1_2, Case2_1, Case2_2, Case2_mix_u, Case2_mix_v, Case3 };

std::string_view to_string(FailureTag tag);

/// A concrete fact showing that a record cannot be effective.
enum class ContradictionKind {
  /// vertices = {y}: y of the copy lies outside π(A) with no neighbour in π(A2).
  UndominatedCopyVertex,
  /// vertices = {b1, b2}: an edge of the copy between π(A1) and π(A2).
  CrossEdge,
  /// vertices = {b, c}: an edge of the copy inside π(A1).
  EdgeInsideImage,
  /// vertices = {b, c, shared}: two members of π(A1) with overlapping closed neighbourhoods.
  ImagePackingOverlap,
  /// vertices = {b, c, shared}: two members of A2 with overlapping closed
  /// neighbourhoods in g itself. Impossible for a genuine record.
  SourcePackingOverlap,
};

std::string_view to_string(ContradictionKind kind);

struct Contradiction {
  ContradictionKind kind{};
  /// Vertices in g's index space; for copy-side kinds they name copy vertices.
  std::vector<Vertex> vertices;
};

struct FailureCase {
  FailureTag tag{};
  std::optional<Vertex> v;
  std::optional<Vertex> u;
  std::optional<Vertex> w;
  std::optional<Vertex> z;
  Contradiction contradiction;
  /// True when the case argument's own witness was found exactly as the
  /// argument describes it. When false, contradiction was found by a direct
  /// search of the image and anomaly explains what was missing.
  bool proof_step_literal = true;
  std::string anomaly;
};

/// Searches π(A) for any concrete obstruction to effectiveness, in the order
/// undominated copy vertex, cross edge, inner edge, packing overlap.
std::optional<Contradiction> find_contradiction(const Graph& g, const SeparableGammaSet& sep, const Permutation& pi);

/**
 * Classifies why sep is not effective under the adversary permutation pi
 * for x, following the case split on |A ∩ N[x]|, and verifies a concrete
 * contradiction for the chosen case.
 *
 * Throws CounterexampleError if sep is effective under pi, and
 * std::logic_error if no case or contradiction can be established.
 */
FailureCase classify_failure(const Graph& g, const SeparableGammaSet& sep, const Permutation& pi, Vertex x);

}  // namespace prismfix
