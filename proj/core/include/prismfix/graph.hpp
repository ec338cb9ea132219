#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "prismfix/vertex_set.hpp"

namespace prismfix {

/// Unordered edge stored canonically with first < second.
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;

/**
 * Simple undirected graph on vertices 0..order()-1, stored as one
 * open-neighbourhood bit set per vertex. Immutable once built; every
 * constructor checks symmetry and loop-freedom.
 */
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Duplicate edges are collapsed. Throws std::invalid_argument on a loop
  /// or an endpoint >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Throws std::invalid_argument unless the rows describe a symmetric,
  /// loop-free relation inside 0..rows.size()-1.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  std::size_t order() const { return adj_.size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  std::size_t edge_count() const;
  EdgeSet edges() const;
  bool is_edgeless() const { return edge_count() == 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

VertexSet open_nbhd(const Graph& g, Vertex v);
VertexSet closed_nbhd(const Graph& g, Vertex v);
/// N(X), the union of open neighbourhoods of the members of X.
VertexSet open_nbhd_set(const Graph& g, const VertexSet& x);
/// N[X] = N(X) ∪ X.
VertexSet closed_nbhd_set(const Graph& g, const VertexSet& x);

/// Edges with one end in X and the other in Y; an edge inside X∩Y appears once.
EdgeSet edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> to_parent;
};

/// Subgraph induced by X, relabelled in increasing vertex order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

/// True iff g is K_{1,m} for some m >= 1 (degree-sequence test, since any
/// graph with m edges, one vertex of degree m and m vertices of degree 1 is a star).
bool is_star(const Graph& g);

/// A non-isolated vertex lying on no triangle.
bool is_c3_free_vertex(const Graph& g, Vertex x);
VertexSet c3_free_vertices(const Graph& g);

/// Length of a shortest cycle, or the infinite girth of a forest.
class Girth {
 public:
  static Girth infinite() { return Girth(std::nullopt); }
  static Girth finite(std::size_t length) { return Girth(length); }

  bool is_infinite() const { return !length_.has_value(); }
  /// Requires !is_infinite().
  std::size_t length() const { return *length_; }
  bool at_least(std::size_t k) const { return is_infinite() || *length_ >= k; }

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  explicit Girth(std::optional<std::size_t> length) : length_(length) {}
  std::optional<std::size_t> length_;
};

Girth girth(const Graph& g);

/// Small named families, used by tests, benchmarks and the CLI.
namespace families {
Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,m}; the centre is vertex 0.
Graph star(std::size_t m);
Graph petersen();
}  // namespace families

}  // namespace prismfix
