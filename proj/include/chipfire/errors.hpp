#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chipfire {

/// Malformed or inconsistent input: bad indices, dimension mismatches,
/// unparsable text, graphs that violate a structural requirement.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Firing a vertex that holds fewer chips than its degree.
class IllegalFiring : public std::runtime_error {
 public:
  IllegalFiring(std::size_t step, std::size_t vertex, std::uint64_t available,
                std::uint64_t required);

  /// 0-based position of the offending move within its sequence.
  std::size_t step() const noexcept { return step_; }
  std::size_t vertex() const noexcept { return vertex_; }
  std::uint64_t available() const noexcept { return available_; }
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::size_t step_;
  std::size_t vertex_;
  std::uint64_t available_;
  std::uint64_t required_;
};

/// A configuration required to be self-reachable is not.
class NotSelfReachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chip arithmetic left the representable range.
class ChipOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace chipfire
