#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "prismfix/vertex_set.hpp"

namespace prismfix {

/// Bijection on 0..size()-1, stored in image notation: images()[v] = π(v).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  /// Throws std::invalid_argument unless images is a bijection on 0..n-1.
  static Permutation from_images(std::vector<Vertex> images);

  /// Parses space-separated images, e.g. "1 0 2".
  static Permutation parse(std::string_view text);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }

  Permutation inverse() const;
  /// (this ∘ other)(v) = this(other(v)).
  Permutation after(const Permutation& other) const;

  VertexSet apply(const VertexSet& s) const;

  bool is_identity() const;

  /// Advances to the lexicographically next permutation; returns false
  /// (and wraps to the identity) after the last one.
  bool advance();

  /// "p0 p1 ... p(n-1)"
  std::string to_image_notation() const;
  /// Disjoint cycles, fixed points omitted, e.g. "(0 1 3)"; "()" for identity.
  std::string to_cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Vertex> images) : images_(std::move(images)) {}
  std::vector<Vertex> images_;
};

}  // namespace prismfix
