#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chipfire/cli.hpp"

using chipfire::run_cli;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_graph(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "chipfire_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string P2 = write_graph("p2.txt", "n 2\n0 1\n");
const std::string P3 = write_graph("p3.txt", "n 3\n0 1\n1 2\n");
const std::string C3 = write_graph("c3.txt", "n 3\n0 1\n1 2\n0 2\n");
const std::string P25 = write_graph("p25.txt", [] {
  std::string s = "n 25\n";
  for (int v = 0; v + 1 < 25; ++v) s += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  return s;
}());

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", P3, "1,0,1"});
  CHECK(r.status == 0);
  CHECK(r.out == "self-reachable\n");

  r = run({"check", P3, "2,0,0"});
  CHECK(r.status == 1);
  CHECK(r.out == "not self-reachable\n");

  for (const char* method : {"tree", "oracle", "greedy", "bfs"}) {
    CHECK(run({"check", P3, "1,0,1", "--method", method}).status == 0);
    CHECK(run({"check", P3, "0,0,2", "--method", method}).status == 1);
  }
  CHECK(run({"check", C3, "2,2,2"}).status == 0);
  CHECK(run({"check", C3, "1,1,1"}).status == 1);
  CHECK(run({"check", C3, "2,2,2", "--method", "tree"}).status == 2);
}

TEST_CASE("check --json") {
  auto r = run({"--json", "check", P3, "1,0,1"});
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["self_reachable"] == true);
}

TEST_CASE("fire") {
  auto r = run({"fire", P2, "2,0", "0,0"});
  CHECK(r.status == 0);
  CHECK(r.out == "0,2\n");
  CHECK(run({"fire", P2, "2,0"}).out == "2,0\n");
  r = run({"fire", P2, "1,0", "0,0"});
  CHECK(r.status == 2);
  CHECK(r.err.find("step 2") != std::string::npos);
}

TEST_CASE("count") {
  auto r = run({"count", "2", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "4\n");
  CHECK(run({"count", "1", "2"}).out == "2\n");
  CHECK(run({"count", "3", "0"}).status == 2);
}

TEST_CASE("witness") {
  auto r = run({"witness", P2, "1,1", "--first", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "1,0\n");

  r = run({"--json", "witness", P3, "0,2,0", "1,0,1"});
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["from"] == "0,2,0");
  CHECK(doc["to"] == "1,0,1");
  CHECK(doc["seq"] == "1");

  CHECK(run({"witness", P3, "2,0,0"}).status == 1);
  CHECK(run({"witness", P3, "0,2,0", "1,1,1"}).status == 2);
}

TEST_CASE("reach") {
  auto r = run({"reach", P2, "2,0"});
  CHECK(r.status == 0);
  CHECK(r.out == "0,2\n1,1\n2,0\n");
  CHECK(run({"--state-guard", "2", "reach", P3, "2,0,0"}).status == 3);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", P3, "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "0,1,1\n0,2,0\n1,0,1\n1,1,0\n");
  CHECK(run({"enumerate", P3, "10", "--guard", "5"}).status == 3);
  CHECK(run({"enumerate", C3, "2"}).status == 2);
}

TEST_CASE("guards map to exit 3") {
  std::string config = "1";
  for (int i = 1; i < 25; ++i) config += ",1";
  CHECK(run({"check", P25, config, "--method", "oracle"}).status == 3);
  CHECK(run({"--subtree-guard", "30", "check", P25, config, "--method", "oracle"}).status == 0);
}

TEST_CASE("gen-tree is deterministic and parseable") {
  auto a = run({"gen-tree", "9", "--seed", "42"});
  auto b = run({"gen-tree", "9", "--seed", "42"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto path = write_graph("gen.txt", a.out);
  CHECK(run({"enumerate", path, "8"}).status == 0);
  CHECK(run({"gen-tree", "0"}).status == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-n", "5", "--max-chips", "5", "--cases", "50"});
  CHECK(r.status == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(run({"verify", "--max-n", "8"}).status == 2);
  CHECK(run({"verify", "--max-n", "0"}).status == 2);

  auto again = run({"verify", "--max-n", "5", "--max-chips", "5", "--cases", "50"});
  CHECK(again.out == r.out);

  auto json = run({"--json", "verify", "--max-n", "3", "--max-chips", "3", "--cases", "20"});
  CHECK(json.status == 0);
  CHECK(nlohmann::json::parse(json.out)["passed"] == true);
}

TEST_CASE("oeis-table") {
  auto r = run({"oeis-table", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.find("8") != std::string::npos);
  auto doc = nlohmann::json::parse(run({"--json", "oeis-table", "4"}).out);
  CHECK(doc["depth"] == 4);
}

TEST_CASE("usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"check", P3}).status == 2);
  CHECK(run({"check", "/nonexistent/graph.txt", "1,0,1"}).status == 2);
  CHECK(run({"check", P3, "1,0"}).status == 2);
  CHECK(run({"check", P3, "a,b,c"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}
