#include "prismfix/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace prismfix {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices)
    throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                                std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(std::size_t n) {
  check_order(n);
  adj_.resize(n);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint >= " +
                                  std::to_string(n));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const std::size_t n = rows.size();
  check_order(n);
  const VertexSet universe = VertexSet::range(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(universe))
      throw std::invalid_argument("row " + std::to_string(v) + " references a vertex outside the graph");
    if (rows[v].contains(v)) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    for (Vertex u : rows[v])
      if (!rows[u].contains(v))
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) + " and " +
                                    std::to_string(u));
  }
  Graph g;
  g.adj_ = std::move(rows);
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.size());
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet open_nbhd(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return g.neighbors(v);
}

VertexSet closed_nbhd(const Graph& g, Vertex v) {
  VertexSet s = open_nbhd(g, v);
  s.insert(v);
  return s;
}

VertexSet open_nbhd_set(const Graph& g, const VertexSet& x) {
  VertexSet s;
  for (Vertex v : x) s |= g.neighbors(v);
  return s;
}

VertexSet closed_nbhd_set(const Graph& g, const VertexSet& x) { return open_nbhd_set(g, x) | x; }

EdgeSet edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  EdgeSet out;
  for (Vertex u : x)
    for (Vertex v : g.neighbors(u) & y) out.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  InducedSubgraph result;
  result.to_parent = x.to_vector();
  std::vector<std::size_t> to_child(g.order(), 0);
  for (std::size_t i = 0; i < result.to_parent.size(); ++i) to_child[result.to_parent[i]] = i;

  std::vector<VertexSet> rows(result.to_parent.size());
  for (std::size_t i = 0; i < result.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(result.to_parent[i]) & x) rows[i].insert(to_child[w]);
  result.graph = Graph::from_adjacency(std::move(rows));
  return result;
}

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return false;
  std::size_t centres = 0;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) ++centres;
    else if (g.degree(v) == 1) ++leaves;
  }
  // K_2 has two vertices of degree n-1 = 1.
  if (n == 2) return centres == 2;
  return centres == 1 && leaves == n - 1;
}

bool is_c3_free_vertex(const Graph& g, Vertex x) {
  const VertexSet& nx = open_nbhd(g, x);
  if (nx.empty()) return false;
  for (Vertex u : nx)
    if (g.neighbors(u).intersects(nx)) return false;
  return true;
}

VertexSet c3_free_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_c3_free_vertex(g, v)) out.insert(v);
  return out;
}

Girth girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::deque<Vertex> queue;

  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = root;
    queue.assign(1, root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == kUnseen ? Girth::infinite() : Girth::finite(best);
}

namespace families {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  EdgeSet e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  EdgeSet e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  EdgeSet e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph star(std::size_t m) {
  EdgeSet e;
  for (Vertex v = 1; v <= m; ++v) e.emplace_back(0, v);
  return Graph::from_edges(m + 1, e);
}

Graph petersen() {
  EdgeSet e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    e.emplace_back(i, i + 5);
    const Vertex a = 5 + i;
    const Vertex b = 5 + (i + 2) % 5;
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(10, e);
}

}  // namespace families

}  // namespace prismfix
