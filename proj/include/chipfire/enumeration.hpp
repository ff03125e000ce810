#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chipfire/firing.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

using BigCount = boost::multiprecision::cpp_int;

/// Memoized table of C(l, n), the number of self-reachable configurations
/// with l chips on an n-vertex tree:
///
///   C(l, 1) = 1,  C(0, n) = 0 (n >= 2),  C(1, 2) = 2,  C(1, n) = 0 (n >= 3),
///   C(l, n) = C(l-1, n) + 2 C(l-1, n-1) - C(l-2, n-1)   (l, n >= 2).
///
/// Filled bottom-up on demand. Not thread-safe for concurrent writers.
class CountTable {
 public:
  /// Throws InputError for n == 0.
  const BigCount& at(std::size_t chips, std::size_t n);

 private:
  void extend(std::size_t chips, std::size_t n);
  // rows_[n - 1][l]
  std::vector<std::vector<BigCount>> rows_;
};

BigCount count_recurrence(std::size_t chips, std::size_t n);

/// Number of ways to place `chips` identical chips on n vertices.
BigCount composition_count(std::size_t chips, std::size_t n);

/// Calls visit for every configuration on n vertices with exactly `chips`
/// chips, in lexicographic order.
void for_each_composition(std::size_t n, std::size_t chips,
                          const std::function<void(const ChipConfig&)>& visit);

inline constexpr std::size_t kDefaultEnumerationGuard = 5'000'000;

/// All self-reachable configurations on t with exactly `chips` chips, in
/// lexicographic order. Throws GuardExceeded when the number of candidate
/// configurations exceeds guard.
std::vector<ChipConfig> enumerate_src(const Tree& t, std::size_t chips,
                                      std::size_t guard = kDefaultEnumerationGuard);

struct TreeCountRow {
  std::size_t tree_index;
  std::string tree;  // edge list "0-1 1-2"
  std::size_t chips;
  BigCount count;
  BigCount expected;
  bool pass() const { return count == expected; }
};

struct TreeIndependenceReport {
  std::size_t vertices;
  std::vector<TreeCountRow> rows;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Counts self-reachable configurations on every catalog tree with n
/// vertices for 0..max_chips chips and compares each with count_recurrence.
/// Throws InputError when n is outside the catalog.
TreeIndependenceReport verify_tree_independence(std::size_t n, std::size_t max_chips);

struct CountTableEmission {
  std::size_t depth;
  /// values[n - 1][l] for 1 <= n <= depth, 0 <= l <= depth.
  std::vector<std::vector<BigCount>> values;
  /// Complete antidiagonals l + n - 1 = k for k < depth, read with l
  /// increasing and with n increasing.
  std::vector<BigCount> by_chips_ascending;
  std::vector<BigCount> by_vertices_ascending;

  std::string to_text() const;
  std::string to_json() const;
};

/// The C(l, n) table in row and antidiagonal order for offline comparison
/// against the published integer sequence. Requires depth >= 1.
CountTableEmission oeis_crosscheck(std::size_t depth);

/// Self-reachable configurations split by the chips on one leaf.
struct LeafClassCounts {
  std::size_t empty = 0;     // leaf holds 0
  std::size_t single = 0;    // leaf holds 1
  std::size_t multiple = 0;  // leaf holds >= 2
};

/// Throws InputError when leaf is not a leaf of t.
LeafClassCounts leaf_class_counts(const Tree& t, Vertex leaf, std::size_t chips);

/// Checks the three leaf-class maps exhaustively on t with `chips` chips:
///   (s, 0) -> s - e_nbr onto S(chips-1) of t without the leaf,
///   (s, 1) -> s         onto S(chips-1) of t without the leaf,
///   (s, k) -> (s, k-1)  onto S(chips-1) of t with the leaf nonempty (k >= 2).
/// Each map must be injective and its image must equal the target set.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_leaf_bijections(const Tree& t, Vertex leaf, std::size_t chips);

/// Edge list text "0-1 1-2" ("K1" for the one-vertex tree).
std::string describe_tree(const Tree& t);

}  // namespace chipfire
