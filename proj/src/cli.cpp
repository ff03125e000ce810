#include "chipfire/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chipfire/enumeration.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/firing.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/selfreach.hpp"
#include "chipfire/verify.hpp"

namespace chipfire {

namespace {

struct Options {
  bool json = false;
  std::size_t subtree_guard = kDefaultSubtreeGuard;
  std::size_t state_guard = kDefaultStateGuard;
  std::size_t enumeration_guard = kDefaultEnumerationGuard;

  std::string graph_path;
  std::string config;
  std::string second;  // sequence for `fire`, target for `witness`
  std::string method = "auto";
  std::optional<Vertex> first;
  std::size_t chips = 0;
  std::size_t vertices = 0;
  std::uint64_t seed = 1;
  std::size_t max_n = 5;
  std::size_t max_chips = 5;
  std::size_t cases = 1000;
};

Graph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_graph(text);
}

Tree load_tree(const std::string& path) {
  auto t = as_tree(load_graph(path));
  if (!t) throw InputError("graph in '" + path + "' is not a tree");
  return *t;
}

ChipConfig load_config(const Graph& g, const std::string& text) {
  ChipConfig c = parse_config(text);
  if (c.size() != g.vertex_count()) {
    throw InputError("configuration '" + text + "' has " + std::to_string(c.size()) +
                     " entries, graph has " + std::to_string(g.vertex_count()) + " vertices");
  }
  return c;
}

int cmd_check(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph_path);
  ChipConfig c = load_config(g, o.config);
  auto tree = as_tree(g);
  std::string method = o.method;
  if (method == "auto") method = tree ? "tree" : "greedy";
  if ((method == "tree" || method == "oracle") && !tree) {
    throw InputError("method '" + method + "' requires a tree");
  }
  if (!g.is_connected()) throw InputError("graph is not connected");

  bool yes = false;
  nlohmann::json doc = {{"config", format_config(c)}, {"method", method}};
  if (method == "tree") {
    auto deficiency = min_subtree_deficiency(*tree, c);
    yes = deficiency >= 0;
    doc["min_subtree_deficiency"] = deficiency;
  } else if (method == "oracle") {
    yes = is_self_reachable_oracle(*tree, c, o.subtree_guard);
  } else if (method == "greedy") {
    yes = is_self_reachable_general(g, c);
  } else if (method == "bfs") {
    yes = reachable_set(g, c, o.state_guard).count(c) > 0;
  } else {
    throw InputError("unknown method '" + method + "'");
  }
  doc["self_reachable"] = yes;
  if (o.json) {
    out << doc.dump() << '\n';
  } else {
    out << (yes ? "self-reachable" : "not self-reachable") << '\n';
  }
  return yes ? kExitOk : kExitNegative;
}

int cmd_fire(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph_path);
  ChipConfig c = load_config(g, o.config);
  FiringSequence seq = parse_sequence(o.second);
  ChipConfig result;
  try {
    result = apply_sequence(g, c, seq);
  } catch (const IllegalFiring& e) {
    throw InputError(e.what());
  }
  if (o.json) {
    out << nlohmann::json{{"from", format_config(c)},
                          {"seq", format_sequence(seq)},
                          {"to", format_config(result)}}
               .dump()
        << '\n';
  } else {
    out << format_config(result) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph_path);
  ChipConfig from = load_config(g, o.config);
  std::optional<ReachWitness> w;
  if (o.second.empty()) {
    // Self-reachability witness: fire every vertex once.
    FiringSequence perm = witness_permutation(g, from, o.first);
    w.emplace(g, from, from, perm);
  } else {
    auto tree = as_tree(g);
    if (!tree) throw InputError("witnesses between two configurations require a tree");
    w.emplace(reach_witness(*tree, from, load_config(g, o.second)));
  }
  out << (o.json ? w->to_json() : format_sequence(w->seq())) << '\n';
  return kExitOk;
}

int cmd_reach(const Options& o, std::ostream& out) {
  Graph g = load_graph(o.graph_path);
  ChipConfig c = load_config(g, o.config);
  auto reached = reachable_set(g, c, o.state_guard);
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& x : reached) list.push_back(format_config(x));
    out << nlohmann::json{{"from", format_config(c)}, {"reachable", list}}.dump() << '\n';
  } else {
    for (const auto& x : reached) out << format_config(x) << '\n';
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.vertices == 0) throw InputError("vertex count must be positive");
  BigCount c = count_recurrence(o.chips, o.vertices);
  if (o.json) {
    out << nlohmann::json{{"chips", o.chips}, {"vertices", o.vertices}, {"count", c.str()}}.dump()
        << '\n';
  } else {
    out << c << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  Tree t = load_tree(o.graph_path);
  auto configs = enumerate_src(t, o.chips, o.enumeration_guard);
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : configs) list.push_back(format_config(c));
    out << nlohmann::json{{"chips", o.chips}, {"count", configs.size()}, {"configs", list}}.dump()
        << '\n';
  } else {
    for (const auto& c : configs) out << format_config(c) << '\n';
  }
  return kExitOk;
}

int cmd_gen_tree(const Options& o, std::ostream& out) {
  if (o.vertices == 0) throw InputError("vertex count must be positive");
  Tree t = random_tree(o.vertices, o.seed);
  if (o.json) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : t.graph().edges()) edges.push_back({u, v});
    out << nlohmann::json{{"vertices", o.vertices}, {"seed", o.seed}, {"edges", edges}}.dump()
        << '\n';
  } else {
    out << format_graph(t.graph());
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_n == 0 || o.max_n > kCatalogMaxVertices) {
    throw InputError("--max-n must be between 1 and " + std::to_string(kCatalogMaxVertices));
  }
  PropertyOptions props;
  props.seed = o.seed;
  props.cases = o.cases;
  VerifyReport report = verify_suite(o.max_n, o.max_chips, props);
  out << (o.json ? report.to_json() + "\n" : report.to_text());
  return report.passed() ? kExitOk : kExitNegative;
}

int cmd_oeis(const Options& o, std::ostream& out) {
  if (o.vertices == 0) throw InputError("depth must be positive");
  auto table = oeis_crosscheck(o.vertices);
  out << (o.json ? table.to_json() + "\n" : table.to_text());
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Chip-firing self-reachability toolkit", "chipfire"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--subtree-guard", o.subtree_guard, "Max tree size for subtree enumeration")
      ->capture_default_str();
  app.add_option("--state-guard", o.state_guard, "Max states explored by reachability search")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Decide whether a configuration is self-reachable");
  check->add_option("graph", o.graph_path, "Graph file ('-' for stdin)")->required();
  check->add_option("config", o.config, "Configuration, e.g. 1,0,1")->required();
  check->add_option("--method", o.method, "auto, tree, oracle, greedy or bfs")
      ->check(CLI::IsMember({"auto", "tree", "oracle", "greedy", "bfs"}))
      ->capture_default_str();

  auto* fire_cmd = app.add_subcommand("fire", "Apply a firing sequence");
  fire_cmd->add_option("graph", o.graph_path)->required();
  fire_cmd->add_option("config", o.config)->required();
  fire_cmd->add_option("sequence", o.second, "Vertices to fire, e.g. 0,1");

  auto* witness = app.add_subcommand(
      "witness", "Firing sequence from one configuration to another (tree), or a "
                 "once-each firing that returns to the start when no target is given");
  witness->add_option("graph", o.graph_path)->required();
  witness->add_option("from", o.config)->required();
  witness->add_option("to", o.second);
  witness->add_option("--first", o.first, "Vertex to fire first (self-witness only)");

  auto* reach = app.add_subcommand("reach", "List every configuration reachable by firing");
  reach->add_option("graph", o.graph_path)->required();
  reach->add_option("config", o.config)->required();

  auto* count = app.add_subcommand("count", "Number of self-reachable configurations on any tree");
  count->add_option("chips", o.chips)->required();
  count->add_option("vertices", o.vertices)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List self-reachable configurations on a tree");
  enumerate->add_option("graph", o.graph_path)->required();
  enumerate->add_option("chips", o.chips)->required();
  enumerate->add_option("--guard", o.enumeration_guard, "Max candidate configurations")
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen-tree", "Uniformly random labeled tree");
  gen->add_option("vertices", o.vertices)->required();
  gen->add_option("--seed", o.seed)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the exhaustive and randomized verification suites");
  verify->add_option("--max-n", o.max_n, "Largest catalog tree for exhaustive checks")
      ->capture_default_str();
  verify->add_option("--max-chips", o.max_chips, "Largest chip total for exhaustive checks")
      ->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();
  verify->add_option("--cases", o.cases, "Randomized cases per property")->capture_default_str();

  auto* oeis = app.add_subcommand("oeis-table", "Emit the count table for offline comparison");
  oeis->add_option("depth", o.vertices)->required();

  std::vector<std::string> argv_storage{"chipfire"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*fire_cmd) return cmd_fire(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*reach) return cmd_reach(o, out);
    if (*count) return cmd_count(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*gen) return cmd_gen_tree(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*oeis) return cmd_oeis(o, out);
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const NotSelfReachable& e) {
    err << "not self-reachable: " << e.what() << '\n';
    return kExitNegative;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ChipOverflow& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chipfire
