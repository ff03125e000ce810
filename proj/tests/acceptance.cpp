// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "chipfire/enumeration.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/firing.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/selfreach.hpp"
#include "chipfire/verify.hpp"
#include "oracles.hpp"

using namespace chipfire;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
};

oracle::Adj adj_of(const Tree& t) {
  const auto& e = t.graph().edges();
  return oracle::adjacency(t.vertex_count(), {e.begin(), e.end()});
}

std::string where(const Tree& t, const ChipConfig& c) {
  return describe_tree(t) + " c=" + format_config(c);
}

// C(l, n) with the convention C = 0 for negative l.
BigCount count_or_zero(long chips, std::size_t n) {
  return chips < 0 ? BigCount(0) : count_recurrence(static_cast<std::size_t>(chips), n);
}

Outcome decider_equivalence() {
  Outcome o;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Tree& t : tree_catalog(n)) {
      for (std::size_t l = 0; l <= 6; ++l) {
        for_each_composition(n, l, [&](const ChipConfig& c) {
          ++o.cases;
          const bool dp = is_self_reachable_tree(t, c);
          const bool subtrees = is_self_reachable_oracle(t, c);
          const bool greedy = is_self_reachable_general(t.graph(), c);
          const bool bfs = reachable_set(t.graph(), c).count(c) > 0;
          if (dp != subtrees || dp != greedy || dp != bfs) o.fail(where(t, c));
        });
      }
    }
  }
  return o;
}

Outcome mutual_reachability() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Tree& t : tree_catalog(n)) {
      const auto a = adj_of(t);
      for (std::size_t l = 0; l <= 5; ++l) {
        // Self-reachable set by independent depth-first self-membership.
        std::set<ChipConfig> src;
        oracle::compositions(n, l, [&](const oracle::Chips& c) {
          if (oracle::self_reachable(a, c)) src.emplace(c);
        });
        for (const auto& s : src) {
          ++o.cases;
          if (reachable_set(t.graph(), s) != src) o.fail("reachable set of " + where(t, s));
          for (const auto& c : src) {
            ++o.cases;
            try {
              auto w = reach_witness(t, s, c);
              if (w.seq().empty() || apply_sequence(t.graph(), s, w.seq()) != c) {
                o.fail("witness " + where(t, s) + " -> " + format_config(c));
              }
            } catch (const std::exception& e) {
              o.fail("witness " + where(t, s) + " -> " + format_config(c) + ": " + e.what());
            }
          }
        }
      }
    }
  }
  return o;
}

Outcome counts() {
  Outcome o;
  const struct {
    std::size_t chips, n;
    int value;
  } pinned[] = {{1, 2, 2}, {2, 2, 3}, {2, 3, 4}, {3, 3, 8}, {3, 4, 8}};
  for (const auto& p : pinned) {
    ++o.cases;
    std::ostringstream msg;
    msg << "C(" << p.chips << "," << p.n << ")";
    if (count_recurrence(p.chips, p.n) != p.value) o.fail(msg.str() + " recurrence");
    // The same value from brute force on every catalog tree of that size.
    for (const Tree& t : tree_catalog(p.n)) {
      const auto& e = t.graph().edges();
      if (oracle::count_self_reachable(p.n, {e.begin(), e.end()}, p.chips) !=
          static_cast<std::size_t>(p.value)) {
        o.fail(msg.str() + " brute force on " + describe_tree(t));
      }
    }
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Tree& t : tree_catalog(n)) {
      for (std::size_t l = 0; l <= 8; ++l) {
        ++o.cases;
        if (BigCount(enumerate_src(t, l).size()) != count_recurrence(l, n)) {
          o.fail(describe_tree(t) + " l=" + std::to_string(l));
        }
      }
    }
  }
  return o;
}

Outcome property_suites(VerifyReport& report) {
  PropertyOptions options;
  options.seed = 1;
  options.cases = 1000;
  options.max_tree_vertices = 10;
  options.max_graph_vertices = 6;
  report = run_property_checks(options);
  Outcome o;
  for (const auto& c : report.checks) {
    o.cases += c.cases;
    if (!c.passed()) o.fail(c.name + ": " + c.first_failure);
  }
  return o;
}

Outcome class_partition() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Tree& t : tree_catalog(n)) {
      const Vertex leaf = t.leaves().back();
      for (long l = 0; l <= 6; ++l) {
        ++o.cases;
        std::size_t empty = 0, single = 0, multiple = 0;
        for (const auto& c : enumerate_src(t, static_cast<std::size_t>(l))) {
          (c[leaf] == 0 ? empty : c[leaf] == 1 ? single : multiple)++;
        }
        const BigCount smaller = count_or_zero(l - 1, n - 1);
        const BigCount rest = count_or_zero(l - 1, n) - count_or_zero(l - 2, n - 1);
        const auto lib = leaf_class_counts(t, leaf, static_cast<std::size_t>(l));
        if (BigCount(empty) != smaller || BigCount(single) != smaller ||
            BigCount(multiple) != rest || lib.empty != empty || lib.single != single ||
            lib.multiple != multiple) {
          o.fail(describe_tree(t) + " l=" + std::to_string(l));
        }
        if (auto problem = check_leaf_bijections(t, leaf, static_cast<std::size_t>(l))) {
          o.fail(describe_tree(t) + " l=" + std::to_string(l) + ": " + *problem);
        }
      }
    }
  }
  return o;
}

Outcome conservation_and_determinism(const VerifyReport& first) {
  Outcome o;
  for (const auto& c : first.checks) {
    if (c.name == "chip-conservation") {
      o.cases += c.cases;
      if (!c.passed()) o.fail("conservation: " + c.first_failure);
    }
  }
  if (o.cases == 0) o.fail("no conservation tally in the property report");

  PropertyOptions options;
  options.cases = 1000;
  const auto second = run_property_checks(options);
  ++o.cases;
  if (second.to_text() != first.to_text() || second.to_json() != first.to_json()) {
    o.fail("repeated property run differs");
  }
  ++o.cases;
  if (oeis_crosscheck(10).to_text() != oeis_crosscheck(10).to_text()) o.fail("count table differs");
  ++o.cases;
  if (format_graph(random_tree(40, 9).graph()) != format_graph(random_tree(40, 9).graph())) {
    o.fail("random tree differs");
  }
  return o;
}

bool report(int index, const std::string& name, const Outcome& o, double seconds) {
  const bool ok = o.failures == 0 && o.cases > 0;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << " " << name
            << " cases=" << o.cases << " failures=" << o.failures << " time=" << seconds << "s";
  if (!ok) std::cout << " first: " << o.first;
  std::cout << std::endl;
  return ok;
}

template <class F>
bool timed(int index, const std::string& name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return report(index, name, o, elapsed.count());
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  VerifyReport properties;
  bool ok = true;
  ok &= timed(1, "decider-equivalence", decider_equivalence);
  ok &= timed(2, "mutual-reachability", mutual_reachability);
  ok &= timed(3, "self-reachable-counts", counts);
  ok &= timed(4, "property-suites", [&] { return property_suites(properties); });
  ok &= timed(5, "leaf-class-partition", class_partition);
  ok &= timed(6, "conservation-determinism", [&] { return conservation_and_determinism(properties); });
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << std::endl;
  return ok ? 0 : 1;
}
