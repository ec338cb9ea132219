#include "prismfix/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "prismfix/graph_io.hpp"

namespace prismfix {

namespace {

// Ordered colour classes from iterated neighbour-count refinement. The class
// order depends only on the isomorphism type.
std::vector<std::vector<Vertex>> refined_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::vector<std::size_t>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.assign(classes + 1, 0);
      sig[0] = colour[v];
      for (Vertex u : g.neighbors(v)) ++sig[1 + colour[u]];
    }
    std::vector<std::vector<std::size_t>> distinct(signature.begin(), signature.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                           distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  std::vector<std::vector<Vertex>> cells(classes);
  for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

// Adjacency bits of g under `order` (position -> vertex), in graph6 bit order.
std::uint64_t labelled_key(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t key = 0;
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
  return key;
}

}  // namespace

std::string canonical_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical labelling is limited to " + std::to_string(kMaxCanonicalOrder) +
                                " vertices");
  auto cells = refined_classes(g);

  std::vector<Vertex> best_order;
  std::uint64_t best_key = 0;
  bool have = false;
  while (true) {
    std::vector<Vertex> order;
    for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
    const std::uint64_t key = labelled_key(g, order);
    if (!have || key > best_key) {
      best_key = key;
      best_order = order;
      have = true;
    }
    // Odometer over the orderings of each class.
    std::size_t c = 0;
    while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
    if (c == cells.size()) break;
  }

  std::vector<Vertex> position(n);
  for (std::size_t i = 0; i < n; ++i) position[best_order[i]] = i;
  EdgeSet edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(std::min(position[u], position[v]), std::max(position[u], position[v]));
  return to_graph6(Graph::from_edges(n, edges));
}

std::vector<Graph> all_graphs(std::size_t n) {
  if (n > kMaxCanonicalOrder) throw std::invalid_argument("all_graphs is limited to " + std::to_string(kMaxCanonicalOrder));
  std::set<std::string> level{to_graph6(Graph(n == 0 ? 0 : 1))};
  for (std::size_t m = 1; m < n; ++m) {
    std::set<std::string> next;
    for (const auto& code : level) {
      const Graph h = parse_graph6(code);
      const EdgeSet base = h.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        EdgeSet edges = base;
        for (Vertex v = 0; v < m; ++v)
          if ((mask >> v) & 1U) edges.emplace_back(v, m);
        next.insert(canonical_graph6(Graph::from_edges(m + 1, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& code : level) out.push_back(parse_graph6(code));
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet reached = VertexSet::singleton(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    const VertexSet next = open_nbhd_set(g, frontier) - reached;
    reached |= next;
    frontier = next;
  }
  return reached.size() == g.order();
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeSet edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  auto images = Permutation::identity(n).images();
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

}  // namespace prismfix
