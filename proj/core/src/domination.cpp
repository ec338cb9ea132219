#include "prismfix/domination.hpp"

#include <algorithm>
#include <string>

#include "prismfix/errors.hpp"

namespace prismfix {

namespace {

// Branch and bound over a compact set type. Graphs with at most 64
// vertices run on single-word sets.
template <typename Set>
class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : n_(g.order()), closed_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) closed_[v].insert(u);
      closed_[v].insert(v);
    }
  }

  GammaResult solve() {
    GammaResult result;
    if (n_ == 0) return result;
    std::size_t max_closed = 0;
    for (const auto& c : closed_) max_closed = std::max(max_closed, c.size());
    std::size_t k = (n_ + max_closed - 1) / max_closed;
    for (;; ++k) {
      budget_ = k;
      chosen_ = Set{};
      if (search(Set::range(n_), Set{}, 0)) break;
    }
    result.gamma = k;
    for (Vertex v : chosen_) result.witness.insert(v);
    return result;
  }

 private:
  bool search(const Set& undominated, Set excluded, std::size_t depth) {
    if (undominated.empty()) return true;
    if (depth == budget_) return false;

    // Each further pick covers at most best_cover undominated vertices.
    std::size_t best_cover = 0;
    for (Vertex u = 0; u < n_; ++u)
      if (!excluded.contains(u)) best_cover = std::max(best_cover, (closed_[u] & undominated).size());
    if (best_cover == 0) return false;
    const std::size_t needed = (undominated.size() + best_cover - 1) / best_cover;
    if (depth + needed > budget_) return false;

    // Branch on the undominated vertex with the fewest remaining dominators.
    Vertex pivot = undominated.first();
    std::size_t fewest = n_ + 1;
    for (Vertex v : undominated) {
      const std::size_t options = (closed_[v] - excluded).size();
      if (options < fewest) {
        fewest = options;
        pivot = v;
        if (options <= 1) break;
      }
    }
    if (fewest == 0) return false;

    for (Vertex u : closed_[pivot] - excluded) {
      chosen_.insert(u);
      if (search(undominated - closed_[u], excluded, depth + 1)) return true;
      chosen_.erase(u);
      // Every solution containing u has been explored.
      excluded.insert(u);
    }
    return false;
  }

  std::size_t n_;
  std::vector<Set> closed_;
  std::size_t budget_ = 0;
  Set chosen_;
};

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) { return closed_nbhd_set(g, d) == g.vertices(); }

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& a) {
  return a.is_subset_of(open_nbhd_set(g, d));
}

GammaResult domination_number(const Graph& g) {
  if (g.order() <= 64) return DominationSearch<BasicVertexSet<1>>(g).solve();
  return DominationSearch<VertexSet>(g).solve();
}

GammaResult naive_domination_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kNaiveOracleMaxOrder)
    throw GuardError("naive domination oracle is limited to " + std::to_string(kNaiveOracleMaxOrder) +
                     " vertices, got " + std::to_string(n));
  for (std::size_t k = 0; k <= n; ++k) {
    GammaResult found;
    bool hit = false;
    for_each_k_subset(n, k, [&](const VertexSet& s) {
      if (is_dominating(g, s)) {
        found = {k, s};
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return found;
  }
  return {};  // unreachable: V dominates
}

std::vector<VertexSet> enumerate_gamma_sets(const Graph& g) {
  return enumerate_gamma_sets(g, domination_number(g).gamma);
}

std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, std::size_t gamma) {
  std::vector<VertexSet> out;
  for_each_k_subset(g.order(), gamma, [&](const VertexSet& s) {
    if (is_dominating(g, s)) out.push_back(s);
    return true;
  });
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_2_packing(const Graph& g, const VertexSet& s) {
  VertexSet covered;
  for (Vertex v : s) {
    const VertexSet nv = closed_nbhd(g, v);
    if (nv.intersects(covered)) return false;
    covered |= nv;
  }
  return true;
}

}  // namespace prismfix
