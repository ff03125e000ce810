#include "chipfire/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chipfire/enumeration.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/firing.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/selfreach.hpp"

namespace chipfire {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " cases=" << c.cases;
    out << " digest=" << std::hex << std::setw(16) << std::setfill('0') << c.digest << std::dec
        << std::setfill(' ');
    if (!c.passed()) {
      ++failed;
      out << " failures=" << c.failures << " first: " << c.first_failure;
    }
    out << '\n';
  }
  if (failed == 0) {
    out << "all checks passed\n";
  } else {
    out << failed << " check(s) failed\n";
  }
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    std::ostringstream digest;
    digest << std::hex << std::setw(16) << std::setfill('0') << c.digest;
    arr.push_back({{"name", c.name},
                   {"cases", c.cases},
                   {"failures", c.failures},
                   {"first_failure", c.first_failure},
                   {"digest", digest.str()},
                   {"passed", c.passed()}});
  }
  return nlohmann::json{{"checks", arr}, {"passed", passed()}}.dump();
}

namespace {

using Rng = std::mt19937_64;
using CaseOutcome = std::optional<std::string>;

struct Digest {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  void add(const ChipConfig& c) {
    add(c.size());
    for (auto x : c) add(x);
  }
  void add(const FiringSequence& s) {
    add(s.size());
    for (auto v : s) add(v);
  }
  void add(const Graph& g) {
    add(g.vertex_count());
    for (auto [u, v] : g.edges()) {
      add(u);
      add(v);
    }
  }
};

struct Conservation {
  std::size_t sequences = 0;
  std::size_t violations = 0;
  std::string first;
};

struct Context {
  Rng rng;
  Digest digest;
  Conservation& conservation;
  const PropertyOptions& options;

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  ChipConfig apply(const Graph& g, const ChipConfig& c, const FiringSequence& seq) {
    ChipConfig out = apply_sequence(g, c, seq);
    ++conservation.sequences;
    if (total_chips(out) != total_chips(c)) {
      if (conservation.violations++ == 0) {
        conservation.first = "total changed applying " + format_sequence(seq) + " to " +
                             format_config(c);
      }
    }
    digest.add(seq);
    return out;
  }
};

struct Instance {
  Graph graph;
  std::optional<Tree> tree;
};

Graph random_connected_graph(Context& ctx, std::size_t n) {
  Tree t = random_tree(n, ctx.rng());
  std::vector<Edge> edges = t.graph().edges();
  std::bernoulli_distribution extra(0.3);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!t.graph().has_edge(u, v) && extra(ctx.rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Tree random_tree_instance(Context& ctx, std::size_t min_n) {
  std::size_t n = ctx.uniform(min_n, std::max(min_n, ctx.options.max_tree_vertices));
  Tree t = random_tree(n, ctx.rng());
  ctx.digest.add(t.graph());
  return t;
}

// Even cases draw a random tree, odd cases a random connected graph.
Instance random_instance(Context& ctx, std::size_t index) {
  if (index % 2 == 0 || ctx.options.max_graph_vertices == 0) {
    Tree t = random_tree_instance(ctx, 1);
    return {t.graph(), t};
  }
  std::size_t n = ctx.uniform(1, ctx.options.max_graph_vertices);
  Graph g = random_connected_graph(ctx, n);
  ctx.digest.add(g);
  return {g, as_tree(g)};
}

ChipConfig random_config(Context& ctx, const Graph& g) {
  ChipConfig c = ChipConfig::zeros(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) c[v] = ctx.uniform(0, g.degree(v) + 1);
  ctx.digest.add(c);
  return c;
}

bool decide(const Instance& inst, const ChipConfig& c) {
  return inst.tree ? is_self_reachable_tree(*inst.tree, c) : is_self_reachable_general(inst.graph, c);
}

ChipConfig random_self_reachable(Context& ctx, const Instance& inst) {
  ChipConfig c = random_config(ctx, inst.graph);
  while (!decide(inst, c)) c[ctx.uniform(0, c.size() - 1)] += 1;
  ctx.digest.add(c);
  return c;
}

std::vector<Vertex> fireable(const Graph& g, const ChipConfig& c) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c[v] >= g.degree(v)) out.push_back(v);
  }
  return out;
}

// Random legal walk of at most max_len moves, optionally restricted to
// vertices with allowed[v] set.
FiringSequence random_walk(Context& ctx, const Graph& g, const ChipConfig& c, std::size_t max_len,
                           const std::vector<char>* allowed = nullptr) {
  FiringSequence seq;
  ChipConfig cur = c;
  std::size_t len = ctx.uniform(0, max_len);
  while (seq.size() < len) {
    auto options = fireable(g, cur);
    if (allowed) {
      std::erase_if(options, [&](Vertex v) { return !(*allowed)[v]; });
    }
    if (options.empty()) break;
    Vertex v = options[ctx.uniform(0, options.size() - 1)];
    cur = fire(g, cur, v);
    seq.push_back(v);
  }
  return seq;
}

// Fires every vertex once in a random legal order; nullopt if stuck.
std::optional<FiringSequence> random_permutation(Context& ctx, const Graph& g,
                                                 const ChipConfig& c) {
  const std::size_t n = g.vertex_count();
  std::vector<char> fired(n, 0);
  ChipConfig cur = c;
  FiringSequence seq;
  while (seq.size() < n) {
    std::vector<Vertex> options;
    for (Vertex v = 0; v < n; ++v) {
      if (!fired[v] && cur[v] >= g.degree(v)) options.push_back(v);
    }
    if (options.empty()) return std::nullopt;
    Vertex v = options[ctx.uniform(0, options.size() - 1)];
    cur = fire(g, cur, v);
    fired[v] = 1;
    seq.push_back(v);
  }
  return seq;
}

ChipConfig with_inserted(const ChipConfig& c, Vertex at, ChipCount value) {
  std::vector<ChipCount> chips = c.chips();
  chips.insert(chips.begin() + static_cast<std::ptrdiff_t>(at), value);
  return ChipConfig(std::move(chips));
}

using CaseFn = std::function<CaseOutcome(Context&, std::size_t)>;

CheckResult run_cases(const std::string& name, std::uint64_t seed, std::size_t cases,
                      Conservation& conservation, const PropertyOptions& options,
                      const CaseFn& body) {
  Context ctx{Rng(seed), Digest{}, conservation, options};
  CheckResult result;
  result.name = name;
  for (std::size_t i = 0; i < cases; ++i) {
    CaseOutcome failure;
    try {
      failure = body(ctx, i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++result.cases;
    if (failure) {
      if (result.failures++ == 0) result.first_failure = "case " + std::to_string(i) + ": " + *failure;
    }
  }
  result.digest = ctx.digest.h;
  return result;
}

CaseOutcome abelian_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  ChipConfig c = random_config(ctx, g);
  FiringSequence phi = random_walk(ctx, g, c, 12);

  // Re-fire the same multiset in a random legal order.
  auto remaining = fire_count_vector(phi, g.vertex_count());
  ChipConfig cur = c;
  FiringSequence psi;
  while (psi.size() < phi.size()) {
    std::vector<Vertex> options;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (remaining[v] > 0 && cur[v] >= g.degree(v)) options.push_back(v);
    }
    if (options.empty()) return "reordering of " + format_sequence(phi) + " got stuck";
    Vertex v = options[ctx.uniform(0, options.size() - 1)];
    --remaining[v];
    cur = fire(g, cur, v);
    psi.push_back(v);
  }
  if (ctx.apply(g, c, phi) != ctx.apply(g, c, psi)) {
    return "sequences " + format_sequence(phi) + " and " + format_sequence(psi) +
           " with equal counts end differently";
  }
  return std::nullopt;
}

CaseOutcome additivity_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  ChipConfig c = random_config(ctx, g);
  FiringSequence phi = random_walk(ctx, g, c, 10);
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> shift(n);
  ChipConfig shifted = c;
  for (Vertex v = 0; v < n; ++v) {
    auto lo = static_cast<std::int64_t>(c[v]);
    shift[v] = std::uniform_int_distribution<std::int64_t>(-lo, 3)(ctx.rng);
    shifted[v] = static_cast<ChipCount>(lo + shift[v]);
  }
  auto lhs = apply_sequence_unchecked(g, shifted, phi);
  ChipConfig base = ctx.apply(g, c, phi);
  for (Vertex v = 0; v < n; ++v) {
    if (lhs[v] != static_cast<std::int64_t>(base[v]) + shift[v]) {
      return "shift not carried through at vertex " + std::to_string(v);
    }
  }
  return std::nullopt;
}

CaseOutcome legality_monotonicity_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  ChipConfig c = random_config(ctx, g);
  FiringSequence phi = random_walk(ctx, g, c, 10);
  auto counts = fire_count_vector(phi, g.vertex_count());
  ChipConfig d = c;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    d[v] = counts[v] > 0 ? c[v] + ctx.uniform(0, 2) : ctx.uniform(0, c[v] + 2);
  }
  ctx.digest.add(d);
  if (!is_legal_sequence(g, d, phi)) {
    return format_sequence(phi) + " legal from " + format_config(c) + " but not from " +
           format_config(d);
  }
  ctx.apply(g, d, phi);
  return std::nullopt;
}

CaseOutcome disjoint_concatenation_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  ChipConfig c = random_config(ctx, g);
  FiringSequence phi = random_walk(ctx, g, c, 6);
  auto counts = fire_count_vector(phi, g.vertex_count());
  std::vector<char> allowed(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) allowed[v] = counts[v] == 0;
  FiringSequence psi = random_walk(ctx, g, c, 6, &allowed);
  for (const auto& joined : {concat(phi, psi), concat(psi, phi)}) {
    if (!is_legal_sequence(g, c, joined)) {
      return "concatenation " + format_sequence(joined) + " is illegal from " + format_config(c);
    }
    ctx.apply(g, c, joined);
  }
  return std::nullopt;
}

CaseOutcome permutation_identity_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  ChipConfig s = random_self_reachable(ctx, inst);
  auto perm = random_permutation(ctx, g, s);
  if (!perm) return "random once-each firing got stuck from " + format_config(s);
  if (ctx.apply(g, s, *perm) != s) return "permutation " + format_sequence(*perm) + " moved chips";
  if (ctx.apply(g, s, witness_permutation(g, s)) != s) return "witness permutation moved chips";
  return std::nullopt;
}

CaseOutcome reduction_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  const std::size_t n = g.vertex_count();
  ChipConfig s = random_self_reachable(ctx, inst);
  FiringSequence phi = random_walk(ctx, g, s, 6);
  ChipConfig cur = apply_sequence(g, s, phi);
  for (std::size_t round = ctx.uniform(1, 2); round > 0; --round) {
    auto perm = random_permutation(ctx, g, cur);
    if (!perm) return "no once-each firing from reachable " + format_config(cur);
    phi.append(*perm);
  }
  cur = apply_sequence(g, s, phi);
  phi.append(random_walk(ctx, g, cur, 4));

  FiringSequence psi = reduce_sequence(g, s, phi);
  if (psi.size() + n != phi.size()) return "reduction removed the wrong number of moves";
  auto before = fire_count_vector(phi, n);
  auto after = fire_count_vector(psi, n);
  for (Vertex v = 0; v < n; ++v) {
    if (before[v] != after[v] + 1) return "reduction changed counts at vertex " + std::to_string(v);
  }
  if (!is_legal_sequence(g, s, psi)) return "reduced sequence is illegal";
  if (ctx.apply(g, s, psi) != ctx.apply(g, s, phi)) return "reduced sequence ends elsewhere";
  return std::nullopt;
}

CaseOutcome leaf_neighbor_case(Context& ctx, std::size_t) {
  Tree t = random_tree_instance(ctx, 2);
  auto leaves = t.leaves();
  Vertex leaf = leaves[ctx.uniform(0, leaves.size() - 1)];
  LeafRemoval r = remove_leaf(t, leaf);
  ChipConfig small = random_config(ctx, r.tree.graph());
  small[r.neighbor] = r.tree.degree(r.neighbor) + ctx.uniform(0, 2);
  ChipCount on_leaf = ctx.uniform(1, 3);
  ChipConfig c = with_inserted(small, leaf, on_leaf);
  ctx.digest.add(c);

  Vertex nbr = r.original_index(r.neighbor);
  FiringSequence pair{leaf, nbr};
  if (!is_legal_sequence(t.graph(), c, pair)) return "leaf then neighbor is illegal";
  ChipConfig expected = with_inserted(fire(r.tree.graph(), small, r.neighbor), leaf, on_leaf);
  if (ctx.apply(t.graph(), c, pair) != expected) return "leaf then neighbor disagrees with smaller tree";
  return std::nullopt;
}

CaseOutcome permutation_witness_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  ChipConfig s = random_self_reachable(ctx, inst);
  auto starts = fireable(g, s);
  if (starts.empty()) return "self-reachable " + format_config(s) + " has no fireable vertex";
  Vertex first = starts[ctx.uniform(0, starts.size() - 1)];
  FiringSequence perm = witness_permutation(g, s, first);
  if (perm.empty() || perm[0] != first) return "witness does not start at " + std::to_string(first);
  auto counts = fire_count_vector(perm, g.vertex_count());
  if (std::any_of(counts.begin(), counts.end(), [](std::size_t k) { return k != 1; })) {
    return "witness " + format_sequence(perm) + " is not a permutation";
  }
  if (ctx.apply(g, s, perm) != s) return "witness does not return to start";
  return std::nullopt;
}

CaseOutcome closure_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  const Graph& g = inst.graph;
  const std::size_t n = g.vertex_count();
  ChipConfig s = random_self_reachable(ctx, inst);
  auto starts = fireable(g, s);
  Vertex first = starts[ctx.uniform(0, starts.size() - 1)];
  ChipConfig d = fire(g, s, first);
  if (!is_self_reachable_general(g, d)) return "firing " + std::to_string(first) + " broke self-reachability";
  FiringSequence perm = witness_permutation(g, s, first);
  FiringSequence tail(std::vector<Vertex>(perm.begin() + 1, perm.end()));
  if (n >= 2 && tail.empty()) return "empty return path";
  if (ctx.apply(g, d, tail) != s) return "permutation tail does not return to start";

  FiringSequence walk = random_walk(ctx, g, s, 8);
  ChipConfig c = ctx.apply(g, s, walk);
  if (!is_self_reachable_general(g, c)) return format_config(c) + " reachable but not self-reachable";
  FiringSequence back = reverse_path(g, s, walk);
  if (ctx.apply(g, c, back) != s) return "reverse path does not return to start";
  if (composition_count(total_chips(s), n) <= 3000 && !walk.empty()) {
    if (!reachable_set(g, c).count(s)) return "start not reachable from " + format_config(c);
  }
  return std::nullopt;
}

CaseOutcome subtree_restriction_case(Context& ctx, std::size_t) {
  Tree t = random_tree_instance(ctx, 1);
  Instance inst{t.graph(), t};
  ChipConfig s = random_self_reachable(ctx, inst);
  const std::size_t n = t.vertex_count();

  std::vector<char> in(n, 0);
  Vertex start = ctx.uniform(0, n - 1);
  in[start] = 1;
  std::size_t want = ctx.uniform(1, n);
  std::vector<Vertex> members{start};
  while (members.size() < want) {
    std::vector<Vertex> frontier;
    for (Vertex v : members) {
      for (Vertex u : t.neighbors(v)) {
        if (!in[u]) frontier.push_back(u);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    Vertex pick = frontier[ctx.uniform(0, frontier.size() - 1)];
    in[pick] = 1;
    members.push_back(pick);
  }
  std::sort(members.begin(), members.end());
  std::vector<Vertex> index(n, 0);
  for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = k;
  std::vector<Edge> edges;
  for (auto [u, v] : t.graph().edges()) {
    if (in[u] && in[v]) edges.emplace_back(index[u], index[v]);
  }
  Tree sub(Graph(members.size(), edges));
  std::vector<ChipCount> chips;
  for (Vertex v : members) chips.push_back(s[v]);
  ChipConfig restricted(std::move(chips));
  ctx.digest.add(restricted);
  if (!is_self_reachable_general(sub.graph(), restricted) || !is_self_reachable_tree(sub, restricted)) {
    return "restriction of " + format_config(s) + " to a subtree is not self-reachable";
  }
  return std::nullopt;
}

CaseOutcome leaf_transfer_case(Context& ctx, std::size_t) {
  Tree t = random_tree_instance(ctx, 2);
  auto leaves = t.leaves();
  Vertex leaf = leaves[ctx.uniform(0, leaves.size() - 1)];
  LeafRemoval r = remove_leaf(t, leaf);
  ChipConfig small = random_config(ctx, r.tree.graph());
  ChipConfig bumped = small;
  bumped[r.neighbor] += 1;

  bool on_smaller = is_self_reachable_tree(r.tree, small);
  bool neighbor_form = is_self_reachable_general(t.graph(), with_inserted(bumped, leaf, 0));
  bool leaf_form = is_self_reachable_general(t.graph(), with_inserted(small, leaf, 1));
  if (on_smaller != neighbor_form || on_smaller != leaf_form) {
    return "leaf transfer disagreement for " + format_config(small) + " on " + describe_tree(r.tree);
  }
  return std::nullopt;
}

CaseOutcome chip_monotonicity_case(Context& ctx, std::size_t i) {
  Instance inst = random_instance(ctx, i);
  ChipConfig s = random_self_reachable(ctx, inst);
  ChipConfig c = s;
  for (Vertex v = 0; v < c.size(); ++v) c[v] += ctx.uniform(0, 2);
  ctx.digest.add(c);
  if (!is_self_reachable_general(inst.graph, c)) return "adding chips to " + format_config(s) + " broke it";
  if (inst.tree && !is_self_reachable_tree(*inst.tree, c)) return "tree decider disagrees on " + format_config(c);
  return std::nullopt;
}

CaseOutcome reachability_equivalence_case(Context& ctx, std::size_t i) {
  std::size_t max_n = std::min<std::size_t>(5, std::max<std::size_t>(1, ctx.options.max_graph_vertices));
  std::size_t n = ctx.uniform(1, max_n);
  Graph g = i % 2 == 0 ? random_tree(n, ctx.rng()).graph() : random_connected_graph(ctx, n);
  ctx.digest.add(g);
  std::size_t chips = g.edge_count() + ctx.uniform(0, 2);
  if (composition_count(chips, n) > 1500) chips = g.edge_count();

  std::vector<ChipConfig> src;
  for_each_composition(n, chips, [&](const ChipConfig& c) {
    if (is_self_reachable_general(g, c)) src.push_back(c);
  });
  std::set<ChipConfig> src_set(src.begin(), src.end());
  std::vector<std::set<ChipConfig>> reach;
  for (const auto& s : src) reach.push_back(reachable_set(g, s));
  for (std::size_t a = 0; a < src.size(); ++a) {
    if (!reach[a].count(src[a])) return "not reflexive at " + format_config(src[a]);
    for (const auto& c : reach[a]) {
      if (!src_set.count(c)) return format_config(c) + " reachable from a self-reachable start but not self-reachable";
      auto b = static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), c) - src.begin());
      if (!reach[b].count(src[a])) return "not symmetric between " + format_config(src[a]) + " and " + format_config(c);
      if (!std::includes(reach[a].begin(), reach[a].end(), reach[b].begin(), reach[b].end())) {
        return "not transitive through " + format_config(c);
      }
    }
    if (as_tree(g) && reach[a] != src_set) return "tree has more than one reachability class";
  }
  return std::nullopt;
}

}  // namespace

VerifyReport run_property_checks(const PropertyOptions& options) {
  struct Suite {
    const char* name;
    CaseOutcome (*body)(Context&, std::size_t);
    std::size_t divisor;
  };
  static constexpr Suite suites[] = {
      {"abelian-property", abelian_case, 1},
      {"additivity-of-firing", additivity_case, 1},
      {"legality-monotonicity", legality_monotonicity_case, 1},
      {"disjoint-concatenation", disjoint_concatenation_case, 1},
      {"permutation-identity", permutation_identity_case, 1},
      {"sequence-reduction", reduction_case, 1},
      {"leaf-neighbor-firing", leaf_neighbor_case, 1},
      {"permutation-witness", permutation_witness_case, 1},
      {"closure-under-firing", closure_case, 1},
      {"subtree-restriction", subtree_restriction_case, 1},
      {"leaf-transfer", leaf_transfer_case, 1},
      {"chip-monotonicity", chip_monotonicity_case, 1},
      {"reachability-equivalence", reachability_equivalence_case, 10},
  };
  Conservation conservation;
  VerifyReport report;
  std::uint64_t index = 0;
  for (const auto& suite : suites) {
    std::uint64_t seed = options.seed * 0x9e3779b97f4a7c15ULL + ++index;
    std::size_t cases = std::max<std::size_t>(1, options.cases / suite.divisor);
    report.checks.push_back(run_cases(suite.name, seed, cases, conservation, options, suite.body));
  }
  CheckResult conserved;
  conserved.name = "chip-conservation";
  conserved.cases = conservation.sequences;
  conserved.failures = conservation.violations;
  conserved.first_failure = conservation.first;
  report.checks.push_back(conserved);
  return report;
}

VerifyReport run_exhaustive_checks(std::size_t max_n, std::size_t max_chips) {
  if (max_n == 0 || max_n > kCatalogMaxVertices) {
    throw InputError("exhaustive checks need 1 <= max_n <= " + std::to_string(kCatalogMaxVertices));
  }
  VerifyReport report;
  CountTable table;
  auto count_at = [&](std::int64_t l, std::size_t n) -> BigCount {
    return l < 0 ? BigCount(0) : table.at(static_cast<std::size_t>(l), n);
  };
  auto fail = [](CheckResult& r, const std::string& what) {
    if (r.failures++ == 0) r.first_failure = what;
  };

  CheckResult deciders;
  deciders.name = "subtree-criterion-equivalence";
  CheckResult mutual;
  mutual.name = "mutual-reachability";
  CheckResult counts;
  counts.name = "count-recurrence";
  CheckResult classes;
  classes.name = "leaf-class-partition";
  CheckResult monotone;
  monotone.name = "count-monotonicity";
  Digest digest;

  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& trees = tree_catalog(n);
    for (std::size_t ti = 0; ti < trees.size(); ++ti) {
      const Tree& t = trees[ti];
      const std::string label = "tree " + describe_tree(t);
      for (std::size_t l = 0; l <= max_chips; ++l) {
        // Four independent deciders must agree on every configuration.
        std::vector<ChipConfig> src;
        for_each_composition(n, l, [&](const ChipConfig& c) {
          ++deciders.cases;
          bool dp = is_self_reachable_tree(t, c);
          bool subtrees = is_self_reachable_oracle(t, c);
          bool greedy = is_self_reachable_general(t.graph(), c);
          bool bfs = reachable_set(t.graph(), c).count(c) > 0;
          if (dp != subtrees || dp != greedy || dp != bfs) {
            fail(deciders, label + " config " + format_config(c) + " deciders disagree");
          }
          if (dp) src.push_back(c);
        });

        ++counts.cases;
        if (BigCount(src.size()) != table.at(l, n)) {
          fail(counts, label + " chips " + std::to_string(l) + ": " + std::to_string(src.size()) +
                           " self-reachable, recurrence says " + table.at(l, n).str());
        }

        const std::set<ChipConfig> src_set(src.begin(), src.end());
        for (const auto& s : src) {
          ++mutual.cases;
          if (reachable_set(t.graph(), s) != src_set) {
            fail(mutual, label + " reachable set of " + format_config(s) + " differs from the self-reachable set");
          }
          for (const auto& c : src) {
            try {
              ReachWitness w = reach_witness(t, s, c);
              digest.add(w.seq());
              if (apply_sequence(t.graph(), s, w.seq()) != c) throw std::logic_error("wrong endpoint");
            } catch (const std::exception& e) {
              fail(mutual, label + " witness " + format_config(s) + " -> " + format_config(c) + ": " + e.what());
            }
          }
        }

        if (n >= 2) {
          Vertex leaf = t.leaves().back();
          auto got = leaf_class_counts(t, leaf, l);
          auto il = static_cast<std::int64_t>(l);
          BigCount single = count_at(il - 1, n - 1);
          BigCount multiple = count_at(il - 1, n) - count_at(il - 2, n - 1);
          ++classes.cases;
          if (BigCount(got.empty) != single || BigCount(got.single) != single ||
              BigCount(got.multiple) != multiple) {
            fail(classes, label + " chips " + std::to_string(l) + ": leaf classes " +
                              std::to_string(got.empty) + "/" + std::to_string(got.single) + "/" +
                              std::to_string(got.multiple));
          }
          if (auto problem = check_leaf_bijections(t, leaf, l)) {
            fail(classes, label + " chips " + std::to_string(l) + ": " + *problem);
          }
        }
      }
    }
    for (std::size_t l = 1; l < max_chips; ++l) {
      ++monotone.cases;
      if (table.at(l + 1, n) < table.at(l, n)) {
        fail(monotone, "C(" + std::to_string(l + 1) + "," + std::to_string(n) + ") < C(" +
                           std::to_string(l) + "," + std::to_string(n) + ")");
      }
    }
  }
  mutual.digest = digest.h;
  for (auto* r : {&deciders, &mutual, &counts, &classes, &monotone}) report.checks.push_back(*r);
  return report;
}

VerifyReport verify_suite(std::size_t max_n, std::size_t max_chips, const PropertyOptions& options) {
  VerifyReport report = run_exhaustive_checks(max_n, max_chips);
  VerifyReport props = run_property_checks(options);
  report.checks.insert(report.checks.end(), props.checks.begin(), props.checks.end());
  return report;
}

}  // namespace chipfire
