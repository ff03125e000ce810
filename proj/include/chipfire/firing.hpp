#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

using ChipCount = std::uint64_t;

/// Nonnegative chip count per vertex. Ordered lexicographically.
class ChipConfig {
 public:
  ChipConfig() = default;
  explicit ChipConfig(std::vector<ChipCount> chips) : chips_(std::move(chips)) {}
  ChipConfig(std::initializer_list<ChipCount> chips) : chips_(chips) {}

  /// All-zero configuration on n vertices.
  static ChipConfig zeros(std::size_t n) { return ChipConfig(std::vector<ChipCount>(n, 0)); }

  std::size_t size() const noexcept { return chips_.size(); }
  ChipCount operator[](Vertex v) const { return chips_[v]; }
  ChipCount& operator[](Vertex v) { return chips_[v]; }
  const std::vector<ChipCount>& chips() const noexcept { return chips_; }

  auto begin() const noexcept { return chips_.begin(); }
  auto end() const noexcept { return chips_.end(); }

  friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
  friend auto operator<=>(const ChipConfig&, const ChipConfig&) = default;

 private:
  std::vector<ChipCount> chips_;
};

struct ChipConfigHash {
  std::size_t operator()(const ChipConfig& c) const noexcept;
};

/// Ordered list of vertex firings.
class FiringSequence {
 public:
  FiringSequence() = default;
  explicit FiringSequence(std::vector<Vertex> moves) : moves_(std::move(moves)) {}
  FiringSequence(std::initializer_list<Vertex> moves) : moves_(moves) {}

  /// The sequence first, first+1, ..., last (empty when first > last).
  static FiringSequence range(Vertex first, Vertex last);

  std::size_t size() const noexcept { return moves_.size(); }
  bool empty() const noexcept { return moves_.empty(); }
  Vertex operator[](std::size_t i) const { return moves_[i]; }
  const std::vector<Vertex>& moves() const noexcept { return moves_; }
  auto begin() const noexcept { return moves_.begin(); }
  auto end() const noexcept { return moves_.end(); }

  void push_back(Vertex v) { moves_.push_back(v); }
  FiringSequence& append(const FiringSequence& tail);

  friend FiringSequence concat(FiringSequence head, const FiringSequence& tail) {
    head.append(tail);
    return head;
  }
  friend bool operator==(const FiringSequence&, const FiringSequence&) = default;

 private:
  std::vector<Vertex> moves_;
};

/// Checked sum of all chips. Throws ChipOverflow.
ChipCount total_chips(const ChipConfig& c);

/// True iff v holds at least deg(v) chips. Throws InputError on a size
/// mismatch or bad index.
bool is_legal_fire(const Graph& g, const ChipConfig& c, Vertex v);

/// Fires v once. Throws IllegalFiring (step 0) when v lacks chips.
ChipConfig fire(const Graph& g, const ChipConfig& c, Vertex v);

/// Fires every move in order. Throws IllegalFiring naming the first
/// illegal step.
ChipConfig apply_sequence(const Graph& g, const ChipConfig& c, const FiringSequence& seq);

/// True iff every move of seq is legal in turn starting from c.
bool is_legal_sequence(const Graph& g, const ChipConfig& c, const FiringSequence& seq);

/// c - L(g) * counts(seq), ignoring legality; entries may be negative.
std::vector<std::int64_t> apply_sequence_unchecked(const Graph& g, const ChipConfig& c,
                                                   const FiringSequence& seq);

/// Number of occurrences of each vertex. Throws InputError on a bad index.
std::vector<std::size_t> fire_count_vector(const FiringSequence& seq, std::size_t n);

/// Removes the first occurrence of every vertex from seq. The result is
/// legal from c and reaches the same configuration as seq.
///
/// Requires seq to be legal from c and to fire every vertex at least once;
/// throws InputError otherwise. The output is re-validated before return.
FiringSequence reduce_sequence(const Graph& g, const ChipConfig& c, const FiringSequence& seq);

/// Applies reduce_sequence until some vertex no longer occurs. On a
/// connected graph the result's firing counts are the unique minimal ones
/// reaching the same configuration.
FiringSequence reduce_fully(const Graph& g, const ChipConfig& c, const FiringSequence& seq);

/// Text forms: comma-separated nonnegative integers ("1,0,2"). The empty
/// string is the empty sequence.
ChipConfig parse_config(std::string_view text);
std::string format_config(const ChipConfig& c);
FiringSequence parse_sequence(std::string_view text);
std::string format_sequence(const FiringSequence& seq);

}  // namespace chipfire
