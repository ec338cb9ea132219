#include "prismfix/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace prismfix {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Vertex> images) {
  std::vector<bool> seen(images.size(), false);
  for (Vertex v : images) {
    if (v >= images.size()) throw std::invalid_argument("permutation image " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("permutation repeats image " + std::to_string(v));
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<Vertex> images;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',') {
      ++pos;
      continue;
    }
    Vertex value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw std::invalid_argument("bad permutation token at offset " + std::to_string(pos));
    images.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
  }
  return from_images(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (Vertex v = 0; v < images_.size(); ++v) inv[images_[v]] = v;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<Vertex> out(images_.size());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = images_[other.images_[v]];
  return Permutation(std::move(out));
}

VertexSet Permutation::apply(const VertexSet& s) const {
  VertexSet out;
  for (Vertex v : s) out.insert(images_[v]);
  return out;
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < images_.size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

bool Permutation::advance() { return std::next_permutation(images_.begin(), images_.end()); }

std::string Permutation::to_image_notation() const {
  std::string out;
  for (Vertex v : images_) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(v);
  }
  return out;
}

std::string Permutation::to_cycle_notation() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (Vertex start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out.push_back('(');
    Vertex v = start;
    do {
      done[v] = true;
      if (v != start) out.push_back(' ');
      out += std::to_string(v);
      v = images_[v];
    } while (v != start);
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

}  // namespace prismfix
