#include "prismfix/prism.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "prismfix/domination.hpp"
#include "prismfix/errors.hpp"

namespace prismfix {

namespace {

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

void require_c3_free(const Graph& g, Vertex x) {
  if (x >= g.order()) throw NotC3FreeError("vertex " + std::to_string(x) + " is out of range");
  if (!is_c3_free_vertex(g, x))
    throw NotC3FreeError("vertex " + std::to_string(x) + " is isolated or lies on a triangle");
}

std::optional<Vertex> first_shared(const Graph& g, Vertex b, Vertex c) {
  const VertexSet shared = closed_nbhd(g, b) & closed_nbhd(g, c);
  if (shared.empty()) return std::nullopt;
  return shared.first();
}

bool contradiction_holds(const Graph& g, const SeparableGammaSet& sep, const Permutation& pi,
                         const Contradiction& c) {
  const VertexSet b1 = pi.apply(sep.a1);
  const VertexSet b2 = pi.apply(sep.a2);
  const VertexSet b = b1 | b2;
  const auto& vs = c.vertices;
  auto overlap = [&](const VertexSet& side) {
    return vs.size() == 3 && vs[0] != vs[1] && side.contains(vs[0]) && side.contains(vs[1]) &&
           closed_nbhd(g, vs[0]).contains(vs[2]) && closed_nbhd(g, vs[1]).contains(vs[2]);
  };
  switch (c.kind) {
    case ContradictionKind::UndominatedCopyVertex:
      return vs.size() == 1 && vs[0] < g.order() && !b.contains(vs[0]) && !g.neighbors(vs[0]).intersects(b2);
    case ContradictionKind::CrossEdge:
      return vs.size() == 2 && b1.contains(vs[0]) && b2.contains(vs[1]) && g.adjacent(vs[0], vs[1]);
    case ContradictionKind::EdgeInsideImage:
      return vs.size() == 2 && b1.contains(vs[0]) && b1.contains(vs[1]) && g.adjacent(vs[0], vs[1]);
    case ContradictionKind::ImagePackingOverlap:
      return overlap(b1);
    case ContradictionKind::SourcePackingOverlap:
      return overlap(sep.a2);
  }
  return false;
}

}  // namespace

PrismGraph build_prism(const Graph& g, const Permutation& pi) {
  const std::size_t n = g.order();
  if (pi.size() != n) throw std::invalid_argument("permutation size does not match graph order");
  std::vector<VertexSet> rows(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      rows[v].insert(u);
      rows[v + n].insert(u + n);
    }
    rows[v].insert(pi(v) + n);
    rows[pi(v) + n].insert(v);
  }
  PrismGraph p;
  p.graph_ = Graph::from_adjacency(std::move(rows));
  p.n_ = n;
  p.pi_ = pi;
  return p;
}

std::size_t prism_gamma(const Graph& g, const Permutation& pi) {
  return domination_number(build_prism(g, pi).graph()).gamma;
}

Permutation adversary_permutation(const Graph& g, Vertex x) {
  require_c3_free(g, x);
  const auto members = closed_nbhd(g, x).to_vector();
  auto images = Permutation::identity(g.order()).images();
  for (std::size_t i = 0; i < members.size(); ++i) images[members[i]] = members[(i + 1) % members.size()];
  return Permutation::from_images(std::move(images));
}

Permutation random_adversary_permutation(const Graph& g, Vertex x, std::uint64_t seed) {
  require_c3_free(g, x);
  const auto members = closed_nbhd(g, x).to_vector();
  std::mt19937_64 rng(seed);
  auto images = Permutation::identity(g.order()).images();
  auto shuffled = members;
  while (true) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < members.size(); ++i) images[members[i]] = shuffled[i];
    auto pi = Permutation::from_images(images);
    if (check_adversary_conditions(g, x, pi).all()) return pi;
  }
}

AdversaryConditions check_adversary_conditions(const Graph& g, Vertex x, const Permutation& pi) {
  AdversaryConditions c;
  if (pi.size() != g.order() || x >= g.order()) return c;
  const VertexSet xs = closed_nbhd(g, x);
  c.fixes_outside = true;
  c.no_fixed_point_inside = true;
  c.no_two_cycle_inside = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!xs.contains(v)) {
      if (pi(v) != v) c.fixes_outside = false;
      continue;
    }
    if (pi(v) == v) c.no_fixed_point_inside = false;
    if (xs.size() >= 3 && pi(v) != v && pi(pi(v)) == v) c.no_two_cycle_inside = false;
  }
  return c;
}

std::string_view to_string(FailureTag tag) {
  switch (tag) {
    case FailureTag::Case1_1: return "Case1_1";
    case FailureTag::Case1_2: return "Case1_2";
    case FailureTag::Case2_1: return "Case2_1";
    case FailureTag::Case2_2: return "Case2_2";
    case FailureTag::Case2_mix_u: return "Case2_mix_u";
    case FailureTag::Case2_mix_v: return "Case2_mix_v";
    case FailureTag::Case3: return "Case3";
  }
  return "?";
}

std::string_view to_string(ContradictionKind kind) {
  switch (kind) {
    case ContradictionKind::UndominatedCopyVertex: return "undominated_copy_vertex";
    case ContradictionKind::CrossEdge: return "cross_edge";
    case ContradictionKind::EdgeInsideImage: return "edge_inside_image";
    case ContradictionKind::ImagePackingOverlap: return "image_packing_overlap";
    case ContradictionKind::SourcePackingOverlap: return "source_packing_overlap";
  }
  return "?";
}

std::optional<Contradiction> find_contradiction(const Graph& g, const SeparableGammaSet& sep,
                                                const Permutation& pi) {
  const VertexSet b1 = pi.apply(sep.a1);
  const VertexSet b2 = pi.apply(sep.a2);
  const VertexSet b = b1 | b2;
  for (Vertex y : b.complement(g.order()))
    if (!g.neighbors(y).intersects(b2)) return Contradiction{ContradictionKind::UndominatedCopyVertex, {y}};
  for (Vertex p : b1)
    for (Vertex q : g.neighbors(p) & b2) return Contradiction{ContradictionKind::CrossEdge, {p, q}};
  for (Vertex p : b1)
    for (Vertex q : g.neighbors(p) & b1) return Contradiction{ContradictionKind::EdgeInsideImage, {p, q}};
  for (Vertex p : b1)
    for (Vertex q : b1)
      if (p < q)
        if (auto s = first_shared(g, p, q)) return Contradiction{ContradictionKind::ImagePackingOverlap, {p, q, *s}};
  return std::nullopt;
}

FailureCase classify_failure(const Graph& g, const SeparableGammaSet& sep, const Permutation& pi, Vertex x) {
  if (pi.size() != g.order()) throw std::invalid_argument("permutation size does not match graph order");
  if (x >= g.order()) throw std::invalid_argument("vertex out of range");
  if (auto w = effective_witness(g, sep, pi))
    throw CounterexampleError("separable gamma-set A=" + set_text(sep.a) + " A1=" + set_text(sep.a1) +
                              " is effective under pi=[" + pi.to_image_notation() + "] for x=" +
                              std::to_string(x));

  const VertexSet xs = closed_nbhd(g, x);
  const VertexSet ax = sep.a & xs;
  const VertexSet a1x = sep.a1 & xs;
  const VertexSet a2x = sep.a2 & xs;
  const VertexSet outside_a = sep.a.complement(g.order());

  FailureCase fc;
  std::optional<Contradiction> found;

  // w in A1, adjacent to z and fixed by pi, as the mixed sub-cases require.
  auto fixed_a1_neighbour = [&](Vertex z) -> std::optional<Vertex> {
    for (Vertex w : sep.a1 & g.neighbors(z))
      if (pi(w) == w) return w;
    return std::nullopt;
  };

  switch (ax.size()) {
    case 0:
      throw ClassificationError("A=" + set_text(sep.a) + " misses N[" + std::to_string(x) + "] and cannot dominate");

    case 1: {
      const Vertex v = ax.first();
      fc.v = v;
      if (sep.a1.contains(v)) {
        fc.tag = FailureTag::Case1_1;
        found = Contradiction{ContradictionKind::UndominatedCopyVertex, {v}};
      } else {
        fc.tag = FailureTag::Case1_2;
        const Vertex w = pi(v);
        fc.w = w;
        for (Vertex u : sep.a1 & g.neighbors(w)) {
          if (pi(u) == u) {
            fc.u = u;
            found = Contradiction{ContradictionKind::CrossEdge, {u, w}};
            break;
          }
        }
        if (!found) fc.anomaly = "no vertex of A1 adjacent to w=" + std::to_string(w) + " is fixed by pi";
      }
      break;
    }

    case 2: {
      if (a1x.size() == 2 || a2x.size() == 2) {
        const auto both = ax.to_vector();
        fc.u = both[0];
        fc.v = both[1];
        if (a1x.size() == 2) {
          fc.tag = FailureTag::Case2_1;
          const Vertex p = pi(both[0]);
          const Vertex q = pi(both[1]);
          if (auto s = first_shared(g, p, q))
            found = Contradiction{ContradictionKind::ImagePackingOverlap, {std::min(p, q), std::max(p, q), *s}};
        } else {
          fc.tag = FailureTag::Case2_2;
          if (auto s = first_shared(g, both[0], both[1]))
            found = Contradiction{ContradictionKind::SourcePackingOverlap, {both[0], both[1], *s}};
          fc.anomaly = "A2 meets N[x] twice, so the record itself violates the 2-packing property";
        }
        break;
      }
      const Vertex u = a1x.first();
      const Vertex v = a2x.first();
      fc.u = u;
      fc.v = v;
      const VertexSet candidates = xs & outside_a;
      if (pi(u) != v && candidates.contains(pi(u))) {
        fc.tag = FailureTag::Case2_mix_u;
        const Vertex z = pi(u);
        fc.z = z;
        if (auto w = fixed_a1_neighbour(z)) {
          fc.w = *w;
          found = Contradiction{ContradictionKind::EdgeInsideImage, {z, *w}};
        }
      } else if (pi(v) != u && candidates.contains(pi(v))) {
        fc.tag = FailureTag::Case2_mix_v;
        const Vertex z = pi(v);
        fc.z = z;
        if (auto w = fixed_a1_neighbour(z)) {
          fc.w = *w;
          found = Contradiction{ContradictionKind::CrossEdge, {*w, z}};
        }
      } else {
        throw ClassificationError("no z in N[x] - A with pi(u)=z or pi(v)=z for u=" + std::to_string(u) +
                                  ", v=" + std::to_string(v));
      }
      if (!found) {
        const VertexSet nz = sep.a1 & g.neighbors(*fc.z);
        fc.anomaly = "every vertex of A1 adjacent to z=" + std::to_string(*fc.z) + " (" + set_text(nz) +
                     ") is moved by pi, so the fixed-w step does not apply";
      }
      break;
    }

    default: {
      fc.tag = FailureTag::Case3;
      if (a1x.size() >= 2) {
        const auto two = a1x.to_vector();
        const Vertex p = pi(two[0]);
        const Vertex q = pi(two[1]);
        if (auto s = first_shared(g, p, q))
          found = Contradiction{ContradictionKind::ImagePackingOverlap, {std::min(p, q), std::max(p, q), *s}};
      } else {
        const auto two = a2x.to_vector();
        if (auto s = first_shared(g, two[0], two[1]))
          found = Contradiction{ContradictionKind::SourcePackingOverlap, {two[0], two[1], *s}};
        fc.anomaly = "A2 meets N[x] twice, so the record itself violates the 2-packing property";
      }
      break;
    }
  }

  if (!found) {
    fc.proof_step_literal = false;
    found = find_contradiction(g, sep, pi);
    if (!found)
      throw ClassificationError("no contradiction found for A=" + set_text(sep.a) + " A1=" + set_text(sep.a1));
  }
  if (!contradiction_holds(g, sep, pi, *found))
    throw ClassificationError(std::string("recorded contradiction ") + std::string(to_string(found->kind)) +
                              " does not hold for A=" + set_text(sep.a) + " A1=" + set_text(sep.a1));
  fc.contradiction = std::move(*found);
  return fc;
}

}  // namespace prismfix
