#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "prismfix/graph.hpp"
#include "prismfix/permutation.hpp"
#include "prismfix/prism.hpp"
#include "prismfix/separable.hpp"

namespace prismfix {

inline constexpr std::size_t kDefaultFixerGuard = 8;
inline constexpr std::size_t kDefaultCheckGuard = 9;

/// Reads PRISM_FIXER_GUARD, falling back to `fallback` when unset or invalid.
std::size_t guard_from_env(std::size_t fallback);

struct ClassifiedRecord {
  SeparableGammaSet sep;
  /// Set when the record was classified; error explains otherwise.
  std::optional<FailureCase> failure;
  std::string error;
};

/// Machine-checkable record of the adversary argument applied to one graph.
struct AdversaryCertificate {
  std::string graph6;
  std::size_t order = 0;
  Vertex x = 0;
  Permutation pi;
  bool randomized = false;
  std::size_t gamma = 0;
  std::size_t prism_gamma = 0;
  std::vector<ClassifiedRecord> records;
  /// Places where the case argument needed a direct search, or failed.
  std::vector<std::string> anomalies;

  bool adversary_conditions_ok = false;
  bool bounds_ok = false;
  bool no_effective_ok = false;
  bool gamma_strict_increase_ok = false;
  /// Every separable record received exactly one failure case.
  bool classification_ok = false;

  bool passed() const {
    return adversary_conditions_ok && bounds_ok && no_effective_ok && gamma_strict_increase_ok && classification_ok;
  }
};

/// check_graph outcome for a graph with no C3-free vertex.
struct NotApplicable {
  std::string graph6;
  std::string reason;
};

using CheckOutcome = std::variant<AdversaryCertificate, NotApplicable>;

struct CheckOptions {
  /// Defaults to the smallest C3-free vertex.
  std::optional<Vertex> vertex;
  /// Draw a random conforming adversary instead of the canonical rotation.
  std::optional<std::uint64_t> random_seed;
  std::size_t guard = kDefaultCheckGuard;
};

/// Runs the whole adversary argument on g. Throws GuardError if
/// g.order() > options.guard and NotC3FreeError if options.vertex is given
/// but not C3-free. Anomalies never throw; they land in the certificate.
CheckOutcome check_graph(const Graph& g, const CheckOptions& options = {});

struct FixerVerdict {
  std::string graph6;
  std::size_t order = 0;
  std::size_t gamma = 0;
  bool is_universal_fixer = false;
  std::optional<Permutation> witness_pi;
  std::optional<std::size_t> witness_prism_gamma;
  std::uint64_t permutations_tested = 0;
  bool automorphism_reduction = false;
};

struct FixerOptions {
  std::size_t guard = kDefaultFixerGuard;
  /// Test one permutation per double coset Aut(G)·π·Aut(G).
  bool automorphism_reduction = false;
};

/// Exhaustive test over all n! permutations (or double-coset
/// representatives), stopping at the first strict increase. Throws
/// GuardError if g.order() > options.guard.
FixerVerdict is_universal_fixer(const Graph& g, const FixerOptions& options = {});

/// All automorphisms of g by backtracking, in lexicographic order.
std::vector<Permutation> automorphisms(const Graph& g);

struct Theorem2Discrepancy {
  Permutation pi;
  std::size_t prism_gamma = 0;
  std::size_t gamma = 0;
  std::optional<EffectiveWitness> witness;
};

/// For every π compares [γ(πG) = γ(G)] with [some separable gamma-set is
/// effective under π]; returns the permutations where they disagree.
/// Throws std::invalid_argument for edgeless g and GuardError above guard.
std::vector<Theorem2Discrepancy> theorem2_biconditional_probe(const Graph& g,
                                                               std::size_t guard = kDefaultFixerGuard);

struct SweepEntry {
  std::size_t line = 0;  // 1-based line number in the corpus
  std::string input;
  std::string error;  // parse or guard failure; empty on success
  bool edgeless = false;
  std::optional<FixerVerdict> verdict;
  std::optional<CheckOutcome> adversary;
};

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t parse_failures = 0;
  std::size_t guard_failures = 0;
  std::size_t universal_fixers = 0;
  std::size_t edgeless = 0;
  /// Every fixer found is edgeless and every edgeless graph is a fixer.
  bool fixers_are_edgeless = true;
  std::size_t applicable = 0;
  std::size_t certificates_passed = 0;
  std::size_t certificates_failed = 0;
};

struct SweepReport {
  /// Sorted by input text, then line.
  std::vector<SweepEntry> entries;
  SweepSummary summary;
};

struct SweepOptions {
  std::size_t jobs = 1;
  FixerOptions fixer;
  std::size_t check_guard = kDefaultCheckGuard;
};

/// Decides fixer status for each graph6 line and certifies every graph
/// with a C3-free vertex. Blank lines are skipped; a bad line is recorded
/// and does not stop the sweep.
SweepReport conjecture_sweep(std::span<const std::string> lines, const SweepOptions& options = {});

}  // namespace prismfix
