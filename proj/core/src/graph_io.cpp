#include "prismfix/graph_io.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "prismfix/errors.hpp"

namespace prismfix {

namespace {

constexpr int kBias = 63;
constexpr char kMinChar = 63;
constexpr char kMaxChar = 126;

std::string_view trim_line_end(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  const char header = text[0];
  if (header < kMinChar || header > kMaxChar) throw ParseError("graph6 size byte out of range", 0);
  if (header == kMaxChar) throw ParseError("multi-byte graph6 size header (n > 62) is not supported", 0);

  const std::size_t n = static_cast<std::size_t>(header - kBias);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body_bytes = (bits + 5) / 6;
  if (text.size() < 1 + body_bytes) throw ParseError("truncated graph6 body", text.size());
  if (text.size() > 1 + body_bytes) throw ParseError("trailing bytes after graph6 body", 1 + body_bytes);

  EdgeSet edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t offset = 1 + k / 6;
      const char c = text[offset];
      if (c < kMinChar || c > kMaxChar) throw ParseError("graph6 body byte out of range", offset);
      const int value = c - kBias;
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Validate the bytes that hold only padding.
  for (std::size_t offset = 1; offset < 1 + body_bytes; ++offset) {
    const char c = text[offset];
    if (c < kMinChar || c > kMaxChar) throw ParseError("graph6 body byte out of range", offset);
  }
  if (bits % 6 != 0) {
    const int last = text[body_bytes] - kBias;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((last & pad_mask) != 0) throw ParseError("nonzero graph6 padding bits", body_bytes);
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order)
    throw std::invalid_argument("graph6 encoder supports at most " + std::to_string(kMaxGraph6Order) +
                                " vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::size_t> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    const std::size_t stop = static_cast<std::size_t>(end - text.data());
    const bool at_boundary = stop == text.size() || text[stop] == ' ' || text[stop] == '\t' ||
                             text[stop] == '\n' || text[stop] == '\r';
    if (ec != std::errc{} || !at_boundary) throw ParseError("expected a non-negative integer", tokens.size());
    tokens.push_back(value);
    pos = stop;
  }

  if (tokens.empty()) throw ParseError("missing vertex count", 0);
  const std::size_t n = tokens[0];
  if (n > kMaxVertices) throw ParseError("vertex count exceeds " + std::to_string(kMaxVertices), 0);
  if ((tokens.size() - 1) % 2 != 0) throw ParseError("dangling endpoint without a partner", tokens.size() - 1);

  EdgeSet edges;
  for (std::size_t t = 1; t < tokens.size(); t += 2) {
    const std::size_t u = tokens[t];
    const std::size_t v = tokens[t + 1];
    if (u >= n) throw ParseError("endpoint " + std::to_string(u) + " >= n", t);
    if (v >= n) throw ParseError("endpoint " + std::to_string(v) + " >= n", t + 1);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), t);
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace prismfix
