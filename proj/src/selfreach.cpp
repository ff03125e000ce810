#include "chipfire/selfreach.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "chipfire/errors.hpp"

namespace chipfire {

ReachWitness::ReachWitness(const Graph& g, ChipConfig from, ChipConfig to, FiringSequence seq)
    : from_(std::move(from)), to_(std::move(to)), seq_(std::move(seq)) {
  if (seq_.empty()) throw InputError("witness sequence must be nonempty");
  ChipConfig end;
  try {
    end = apply_sequence(g, from_, seq_);
  } catch (const IllegalFiring& e) {
    throw InputError(std::string("witness sequence is not legal: ") + e.what());
  }
  if (end != to_) throw InputError("witness sequence does not reach its target");
}

std::string ReachWitness::to_json() const {
  return R"({"from":")" + format_config(from_) + R"(","to":")" + format_config(to_) +
         R"(","seq":")" + format_sequence(seq_) + R"("})";
}

namespace {

void check_size(const Graph& g, const ChipConfig& c) {
  if (c.size() != g.vertex_count()) {
    throw InputError("configuration has " + std::to_string(c.size()) + " entries but graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw InputError("graph is not connected");
}

}  // namespace

std::int64_t min_subtree_deficiency(const Tree& t, const ChipConfig& c) {
  const Graph& g = t.graph();
  check_size(g, c);
  const std::size_t n = g.vertex_count();
  constexpr auto kMaxChip = static_cast<ChipCount>(std::numeric_limits<std::int64_t>::max() / 4);

  // best[v]: minimum of sum(c - 1) over connected subsets whose vertex
  // closest to the root is v.
  std::vector<Vertex> order{0};
  std::vector<char> visited(n, 0);
  visited[0] = 1;
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex u : g.neighbors(order[i])) {
      if (!visited[u]) {
        visited[u] = 1;
        order.push_back(u);
      }
    }
  }
  // Children are finished before their parent in reverse BFS order.
  std::vector<std::int64_t> best(n, 0);
  std::vector<char> done(n, 0);
  std::int64_t overall = std::numeric_limits<std::int64_t>::max();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (c[v] > kMaxChip) throw ChipOverflow("chip count too large for deficiency computation");
    std::int64_t value = static_cast<std::int64_t>(c[v]) - 1;
    for (Vertex u : g.neighbors(v)) {
      if (done[u]) value += std::min<std::int64_t>(0, best[u]);
    }
    done[v] = 1;
    best[v] = value;
    overall = std::min(overall, value);
  }
  return overall + 1;
}

bool is_self_reachable_tree(const Tree& t, const ChipConfig& c) {
  return min_subtree_deficiency(t, c) >= 0;
}

bool is_self_reachable_oracle(const Tree& t, const ChipConfig& c, std::size_t guard) {
  check_size(t.graph(), c);
  for (const auto& subtree : enumerate_subtrees(t, guard)) {
    ChipCount chips = 0;
    for (Vertex v : subtree) chips += c[v];
    if (chips + 1 < subtree.size()) return false;
  }
  return true;
}

FiringSequence witness_permutation(const Graph& g, const ChipConfig& c,
                                   std::optional<Vertex> first) {
  check_size(g, c);
  require_connected(g);
  const std::size_t n = g.vertex_count();
  auto chips = c.chips();
  std::vector<char> fired(n, 0);
  FiringSequence seq;

  auto fire_once = [&](Vertex v) {
    chips[v] -= g.degree(v);
    for (Vertex u : g.neighbors(v)) chips[u] += 1;
    fired[v] = 1;
    seq.push_back(v);
  };

  if (first) {
    if (*first >= n) throw InputError("vertex " + std::to_string(*first) + " out of range");
    if (chips[*first] < g.degree(*first)) {
      throw InputError("vertex " + std::to_string(*first) + " cannot fire from this configuration");
    }
    fire_once(*first);
  }
  while (seq.size() < n) {
    // Unfired vertices only gain chips, so a vertex that can fire now
    // stays fireable; taking any of them never blocks a completion.
    Vertex next = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!fired[v] && chips[v] >= g.degree(v)) {
        next = v;
        break;
      }
    }
    if (next == n) throw NotSelfReachable("configuration is not self-reachable");
    fire_once(next);
  }
  return seq;
}

bool is_self_reachable_general(const Graph& g, const ChipConfig& c) {
  try {
    witness_permutation(g, c);
    return true;
  } catch (const NotSelfReachable&) {
    return false;
  }
}

std::set<ChipConfig> reachable_set(const Graph& g, const ChipConfig& c, std::size_t node_guard) {
  check_size(g, c);
  const std::size_t n = g.vertex_count();
  std::unordered_set<ChipConfig, ChipConfigHash> seen;
  std::deque<ChipConfig> frontier;

  auto expand = [&](const ChipConfig& x) {
    for (Vertex v = 0; v < n; ++v) {
      if (x[v] < g.degree(v)) continue;
      ChipConfig y = fire(g, x, v);
      if (seen.insert(y).second) {
        if (seen.size() > node_guard) {
          throw GuardExceeded("reachable set exceeds state guard " + std::to_string(node_guard));
        }
        frontier.push_back(std::move(y));
      }
    }
  };

  expand(c);
  while (!frontier.empty()) {
    ChipConfig x = std::move(frontier.front());
    frontier.pop_front();
    expand(x);
  }
  return {seen.begin(), seen.end()};
}

std::pair<ChipConfig, FiringSequence> fireable_configuration(const Graph& g, const ChipConfig& s,
                                                             Vertex v) {
  auto perm = witness_permutation(g, s);
  if (v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  if (is_legal_fire(g, s, v)) return {s, {}};
  auto pos = std::find(perm.begin(), perm.end(), v);
  FiringSequence prefix(std::vector<Vertex>(perm.begin(), pos));
  return {apply_sequence(g, s, prefix), prefix};
}

FiringSequence reverse_path(const Graph& g, const ChipConfig& start, const FiringSequence& seq) {
  // configs[j] is the configuration before move j.
  std::vector<ChipConfig> configs{start};
  configs.reserve(seq.size() + 1);
  for (Vertex v : seq) configs.push_back(fire(g, configs.back(), v));

  FiringSequence back;
  for (std::size_t j = seq.size(); j-- > 0;) {
    auto perm = witness_permutation(g, configs[j], seq[j]);
    back.append(FiringSequence(std::vector<Vertex>(perm.begin() + 1, perm.end())));
  }
  return back;
}

namespace {

ChipConfig restrict_to(const LeafRemoval& r, const ChipConfig& c) {
  std::vector<ChipCount> out;
  out.reserve(c.size() - 1);
  for (Vertex v = 0; v < c.size(); ++v) {
    if (v != r.removed) out.push_back(c[v]);
  }
  return ChipConfig(std::move(out));
}

FiringSequence tree_path(const Tree& t, const ChipConfig& s, const ChipConfig& c);

// s and c self-reachable, equal totals, s[leaf] >= c[leaf] >= 1. Drains the
// leaf down to c[leaf], solves on the tree without the leaf, then lifts
// each firing of the neighbor to (leaf, neighbor).
FiringSequence drain_and_lift(const LeafRemoval& r, const ChipConfig& s, const ChipConfig& c) {
  const Vertex leaf = r.removed;
  const Vertex nbr = r.original_index(r.neighbor);
  FiringSequence seq;
  ChipConfig drained = s;
  for (ChipCount k = c[leaf]; k < s[leaf]; ++k) seq.push_back(leaf);
  drained[nbr] += s[leaf] - c[leaf];
  drained[leaf] = c[leaf];

  auto sub = tree_path(r.tree, restrict_to(r, drained), restrict_to(r, c));
  for (Vertex v : sub) {
    Vertex orig = r.original_index(v);
    if (orig == nbr) seq.push_back(leaf);
    seq.push_back(orig);
  }
  return seq;
}

// Possibly empty legal sequence from s to c; both self-reachable on t with
// equal totals.
FiringSequence tree_path(const Tree& t, const ChipConfig& s, const ChipConfig& c) {
  if (t.vertex_count() == 1 || s == c) return {};
  const Graph& g = t.graph();
  const Vertex leaf = t.leaves().back();
  const LeafRemoval r = remove_leaf(t, leaf);

  // Move both endpoints to configurations holding a chip on the leaf.
  auto [sigma, to_sigma] =
      s[leaf] >= 1 ? std::pair{s, FiringSequence{}} : fireable_configuration(g, s, leaf);
  auto [delta, to_delta] =
      c[leaf] >= 1 ? std::pair{c, FiringSequence{}} : fireable_configuration(g, c, leaf);

  FiringSequence middle = sigma[leaf] >= delta[leaf]
                              ? drain_and_lift(r, sigma, delta)
                              : reverse_path(g, delta, drain_and_lift(r, delta, sigma));

  FiringSequence seq = std::move(to_sigma);
  seq.append(middle);
  seq.append(reverse_path(g, c, to_delta));
  return reduce_fully(g, s, seq);
}

}  // namespace

ReachWitness reach_witness(const Tree& t, const ChipConfig& s, const ChipConfig& c) {
  const Graph& g = t.graph();
  check_size(g, s);
  check_size(g, c);
  if (total_chips(s) != total_chips(c)) {
    throw InputError("configurations hold different numbers of chips");
  }
  if (!is_self_reachable_tree(t, s)) {
    throw NotSelfReachable("source configuration " + format_config(s) + " is not self-reachable");
  }
  if (!is_self_reachable_tree(t, c)) {
    throw NotSelfReachable("target configuration " + format_config(c) + " is not self-reachable");
  }
  FiringSequence seq = tree_path(t, s, c);
  if (seq.empty()) seq = witness_permutation(g, s);
  return ReachWitness(g, s, c, std::move(seq));
}

}  // namespace chipfire
