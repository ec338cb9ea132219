#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prismfix {

/// Malformed graph6 or edge-list input. offset is a byte offset (graph6)
/// or token index (edge list) into the rejected text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An exhaustive routine was asked to run on a graph larger than its guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex was required to be C3-free and is not.
class NotC3FreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A separable gamma-set turned out to be effective under the adversary
/// permutation. This falsifies the non-fixer argument and must never be
/// swallowed.
class CounterexampleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The case analysis could not place a separable gamma-set, or a verified
/// contradiction failed to hold. Reported as an anomaly, never guessed around.
class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prismfix
