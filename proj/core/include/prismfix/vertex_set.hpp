#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace prismfix {

using Vertex = std::size_t;

/**
 * Fixed-capacity bit set over dense vertex ids.
 *
 * Words is the number of 64-bit words; a set can hold vertices
 * 0 .. 64*Words-1. Complement is always taken relative to an explicit
 * universe size so that bits past the graph order stay clear.
 */
template <std::size_t Words>
class BasicVertexSet {
 public:
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kCapacity = Words * 64;

  constexpr BasicVertexSet() = default;

  constexpr BasicVertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr BasicVertexSet range(std::size_t n) {
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.bits_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.bits_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static constexpr BasicVertexSet singleton(Vertex v) {
    BasicVertexSet s;
    s.insert(v);
    return s;
  }

  constexpr bool contains(Vertex v) const {
    return v < kCapacity && ((bits_[v / 64] >> (v % 64)) & 1U) != 0;
  }
  constexpr void insert(Vertex v) { bits_[v / 64] |= std::uint64_t{1} << (v % 64); }
  constexpr void erase(Vertex v) { bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  constexpr std::size_t size() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  constexpr bool empty() const {
    for (auto w : bits_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member; the set must be nonempty.
  constexpr Vertex first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (bits_[w] != 0) return w * 64 + static_cast<Vertex>(std::countr_zero(bits_[w]));
    return kCapacity;
  }

  constexpr BasicVertexSet complement(std::size_t n) const { return range(n) - *this; }

  constexpr bool is_subset_of(const BasicVertexSet& other) const {
    for (std::size_t w = 0; w < Words; ++w)
      if ((bits_[w] & ~other.bits_[w]) != 0) return false;
    return true;
  }

  constexpr bool intersects(const BasicVertexSet& other) const {
    for (std::size_t w = 0; w < Words; ++w)
      if ((bits_[w] & other.bits_[w]) != 0) return true;
    return false;
  }

  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] |= o.bits_[w];
    return *this;
  }
  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] &= o.bits_[w];
    return *this;
  }
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] &= ~o.bits_[w];
    return *this;
  }

  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

  /// Orders sets by their bit pattern read as an unsigned integer.
  friend constexpr std::strong_ordering operator<=>(const BasicVertexSet& a, const BasicVertexSet& b) {
    for (std::size_t w = Words; w-- > 0;)
      if (a.bits_[w] != b.bits_[w]) return a.bits_[w] <=> b.bits_[w];
    return std::strong_ordering::equal;
  }

  constexpr std::uint64_t word(std::size_t w) const { return bits_[w]; }
  constexpr void set_word(std::size_t w, std::uint64_t value) { bits_[w] = value; }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr const_iterator() = default;
    constexpr const_iterator(const BasicVertexSet* set, std::size_t word) : set_(set), word_(word) {
      if (set_ != nullptr && word_ < Words) {
        rest_ = set_->bits_[word_];
        advance_to_member();
      }
    }

    constexpr Vertex operator*() const { return word_ * 64 + static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr const_iterator& operator++() {
      rest_ &= rest_ - 1;
      advance_to_member();
      return *this;
    }
    constexpr const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.word_ == b.word_ && a.rest_ == b.rest_;
    }

   private:
    constexpr void advance_to_member() {
      while (rest_ == 0 && ++word_ < Words) rest_ = set_->bits_[word_];
      if (word_ >= Words) {
        word_ = Words;
        rest_ = 0;
      }
    }

    const BasicVertexSet* set_ = nullptr;
    std::size_t word_ = Words;
    std::uint64_t rest_ = 0;
  };

  constexpr const_iterator begin() const { return const_iterator(this, 0); }
  constexpr const_iterator end() const { return const_iterator(this, Words); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::array<std::uint64_t, Words> bits_{};
};

inline constexpr std::size_t kMaxVertices = 256;

using VertexSet = BasicVertexSet<kMaxVertices / 64>;

}  // namespace prismfix
