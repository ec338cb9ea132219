#pragma once

#include <string>
#include <string_view>

#include "prismfix/graph.hpp"

namespace prismfix {

/// Largest order expressible with the one-byte graph6 size header.
inline constexpr std::size_t kMaxGraph6Order = 62;

/// Decodes one graph6 line (trailing CR/LF tolerated). Only the one-byte
/// size header is supported. Throws ParseError naming the byte offset.
Graph parse_graph6(std::string_view text);

/// Throws std::invalid_argument if g.order() > kMaxGraph6Order.
std::string to_graph6(const Graph& g);

/// Parses "n" followed by whitespace-separated 0-based "u v" pairs.
/// Duplicate edges collapse; loops and out-of-range endpoints throw
/// ParseError naming the token index.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: "n\nu v\n..." with canonical edges.
std::string to_edge_list(const Graph& g);

}  // namespace prismfix
