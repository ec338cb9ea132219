#include "prismfix/separable.hpp"

#include <stdexcept>

#include "prismfix/domination.hpp"

namespace prismfix {

std::vector<SeparableGammaSet> enumerate_separable(const Graph& g) {
  const auto gamma_sets = enumerate_gamma_sets(g);
  return enumerate_separable(g, gamma_sets);
}

std::vector<SeparableGammaSet> enumerate_separable(const Graph& g, std::span<const VertexSet> gamma_sets) {
  std::vector<SeparableGammaSet> out;
  for (const VertexSet& a : gamma_sets) {
    const auto members = a.to_vector();
    const std::size_t k = members.size();
    if (k < 2) continue;
    if (k > 62) throw std::length_error("gamma-set too large for bipartition enumeration");
    const VertexSet outside = a.complement(g.order());
    // Mask order over the sorted members is bit-pattern order on the subsets.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
      VertexSet a1;
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1U) a1.insert(members[i]);
      if (dominates(g, a1, outside)) out.push_back({a, a1, a - a1});
    }
  }
  return out;
}

Lemma1Report lemma1_check(const Graph& g, const SeparableGammaSet& sep) {
  Lemma1Report r;
  r.a2_independent = is_independent(g, sep.a2);
  r.no_cross_edges = edges_between(g, sep.a1, sep.a2).empty();
  r.a2_is_2_packing = is_2_packing(g, sep.a2);
  return r;
}

std::optional<EffectiveWitness> effective_witness(const Graph& g, const SeparableGammaSet& sep,
                                                  const Permutation& pi) {
  if (pi.size() != g.order()) throw std::invalid_argument("permutation size does not match graph order");
  EffectiveWitness w{sep, pi.apply(sep.a1), pi.apply(sep.a2)};
  if (w.b1.empty() || w.b2.empty()) return std::nullopt;
  const VertexSet b = w.b1 | w.b2;
  if (!is_dominating(g, b)) return std::nullopt;
  if (!dominates(g, w.b2, b.complement(g.order()))) return std::nullopt;
  return w;
}

bool is_effective(const Graph& g, const SeparableGammaSet& sep, const Permutation& pi) {
  return effective_witness(g, sep, pi).has_value();
}

std::optional<EffectiveWitness> exists_effective(const Graph& g, const Permutation& pi) {
  const auto records = enumerate_separable(g);
  return exists_effective(g, records, pi);
}

std::optional<EffectiveWitness> exists_effective(const Graph& g, std::span<const SeparableGammaSet> records,
                                                 const Permutation& pi) {
  for (const auto& sep : records)
    if (auto w = effective_witness(g, sep, pi)) return w;
  return std::nullopt;
}

}  // namespace prismfix
