#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "chipfire/firing.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

/// A validated legal, nonempty firing sequence leading from `from` to `to`.
class ReachWitness {
 public:
  /// Throws InputError if seq is empty, illegal from `from`, or does not
  /// end at `to`.
  ReachWitness(const Graph& g, ChipConfig from, ChipConfig to, FiringSequence seq);

  const ChipConfig& from() const noexcept { return from_; }
  const ChipConfig& to() const noexcept { return to_; }
  const FiringSequence& seq() const noexcept { return seq_; }

  /// {"from": "...", "to": "...", "seq": "..."} using the text forms.
  std::string to_json() const;

 private:
  ChipConfig from_;
  ChipConfig to_;
  FiringSequence seq_;
};

/// min over nonempty connected subtrees S of chips(S) - (|S| - 1),
/// computed by a linear-time tree DP.
std::int64_t min_subtree_deficiency(const Tree& t, const ChipConfig& c);

/// Subtree criterion: every m-vertex subtree carries at least m - 1 chips.
bool is_self_reachable_tree(const Tree& t, const ChipConfig& c);

/// The subtree criterion checked directly over enumerate_subtrees.
bool is_self_reachable_oracle(const Tree& t, const ChipConfig& c,
                              std::size_t guard = kDefaultSubtreeGuard);

/// A legal sequence firing every vertex exactly once (so it returns to c),
/// starting with `first` when given. Greedy: after `first`, always fire the
/// lowest-indexed unfired vertex that can fire.
///
/// Throws InputError for a disconnected graph or an unfireable `first`,
/// NotSelfReachable when no such sequence exists.
FiringSequence witness_permutation(const Graph& g, const ChipConfig& c,
                                   std::optional<Vertex> first = std::nullopt);

/// Self-reachability on a connected graph, decided by the existence of a
/// firing permutation. Throws InputError for a disconnected graph.
bool is_self_reachable_general(const Graph& g, const ChipConfig& c);

inline constexpr std::size_t kDefaultStateGuard = 2'000'000;

/// Every configuration reachable from c by a nonempty legal sequence
/// (c itself only if it can be re-reached). Breadth-first search; throws
/// GuardExceeded once more than node_guard states are discovered.
std::set<ChipConfig> reachable_set(const Graph& g, const ChipConfig& c,
                                   std::size_t node_guard = kDefaultStateGuard);

/// A configuration reachable from s (possibly s itself) where v can fire,
/// together with the legal sequence leading there. Returns (s, []) when v
/// can already fire. Throws NotSelfReachable when s is not self-reachable.
std::pair<ChipConfig, FiringSequence> fireable_configuration(const Graph& g,
                                                             const ChipConfig& s, Vertex v);

/// Given a legal sequence from a self-reachable `start`, a legal sequence
/// leading from its end configuration back to `start`. Each move is undone
/// by the tail of a firing permutation that begins with that move.
FiringSequence reverse_path(const Graph& g, const ChipConfig& start, const FiringSequence& seq);

/// A witness that c is reachable from s on a tree. Both must be
/// self-reachable with equal totals; throws InputError for differing
/// totals and NotSelfReachable otherwise.
ReachWitness reach_witness(const Tree& t, const ChipConfig& s, const ChipConfig& c);

}  // namespace chipfire
