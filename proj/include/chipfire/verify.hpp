#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace chipfire {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// Order-sensitive hash of the generated instances; equal seeds give
  /// equal digests.
  std::uint64_t digest = 0;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Exhaustive checks over the catalog trees with at most max_n vertices
/// and at most max_chips chips: agreement of the four self-reachability
/// deciders, mutual reachability with validated witnesses, counts against
/// the recurrence, the leaf-class partition and its bijections, and count
/// monotonicity. Throws InputError when max_n exceeds the catalog.
VerifyReport run_exhaustive_checks(std::size_t max_n, std::size_t max_chips);

struct PropertyOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  std::size_t max_tree_vertices = 10;
  std::size_t max_graph_vertices = 6;
};

/// Seeded randomized property suites on random trees and small random
/// connected graphs, plus chip conservation across every legal sequence
/// they apply.
VerifyReport run_property_checks(const PropertyOptions& options);

/// Both of the above.
VerifyReport verify_suite(std::size_t max_n, std::size_t max_chips, const PropertyOptions& options);

}  // namespace chipfire
