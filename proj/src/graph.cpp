#include "chipfire/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

std::string vertex_error(Vertex v, std::size_t n) {
  return "vertex index " + std::to_string(v) + " out of range for " + std::to_string(n) +
         "-vertex graph";
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  if (n == 0) throw InputError("graph must have at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n) throw InputError(vertex_error(u, n));
    if (v >= n) throw InputError(vertex_error(v, n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge " + std::to_string(dup->first) + " " +
                     std::to_string(dup->second));
  }
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v >= adjacency_.size()) throw InputError(vertex_error(v, adjacency_.size()));
  return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const {
  std::vector<char> seen(vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == vertex_count();
}

Tree::Tree(Graph g) : graph_(std::move(g)) {
  if (graph_.edge_count() + 1 != graph_.vertex_count() || !graph_.is_connected()) {
    throw InputError("graph is not a tree");
  }
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::optional<Tree> as_tree(const Graph& g) {
  if (g.edge_count() + 1 != g.vertex_count() || !g.is_connected()) return std::nullopt;
  return Tree(g);
}

IntMatrix laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (Vertex v = 0; v < n; ++v) m[v][v] = static_cast<std::int64_t>(g.degree(v));
  for (auto [u, v] : g.edges()) {
    m[u][v] = -1;
    m[v][u] = -1;
  }
  return m;
}

std::vector<std::vector<Vertex>> enumerate_subtrees(const Tree& t, std::size_t size_limit) {
  const std::size_t n = t.vertex_count();
  if (n > size_limit) {
    throw GuardExceeded("subtree enumeration on " + std::to_string(n) +
                        " vertices exceeds guard " + std::to_string(size_limit));
  }
  // Each connected subset is generated exactly once, rooted at its smallest
  // vertex r and grown only through vertices larger than r.
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    std::function<std::vector<std::vector<Vertex>>(Vertex, Vertex)> grow =
        [&](Vertex v, Vertex parent) {
          std::vector<std::vector<Vertex>> sets{{v}};
          for (Vertex child : t.neighbors(v)) {
            if (child == parent || child < root) continue;
            auto below = grow(child, v);
            const std::size_t existing = sets.size();
            for (std::size_t i = 0; i < existing; ++i) {
              for (const auto& extra : below) {
                auto merged = sets[i];
                merged.insert(merged.end(), extra.begin(), extra.end());
                sets.push_back(std::move(merged));
              }
            }
          }
          return sets;
        };
    for (auto& s : grow(root, root)) {
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

LeafRemoval remove_leaf(const Tree& t, Vertex leaf) {
  const std::size_t n = t.vertex_count();
  if (leaf >= n) throw InputError(vertex_error(leaf, n));
  if (n == 1) throw InputError("cannot remove a vertex from the one-vertex tree");
  if (t.degree(leaf) != 1) throw InputError("vertex " + std::to_string(leaf) + " is not a leaf");

  auto shift = [leaf](Vertex v) { return v < leaf ? v : v - 1; };
  std::vector<Edge> edges;
  edges.reserve(n - 2);
  for (auto [u, v] : t.graph().edges()) {
    if (u == leaf || v == leaf) continue;
    edges.emplace_back(shift(u), shift(v));
  }
  Vertex neighbor = t.neighbors(leaf).front();
  return LeafRemoval{Tree(Graph(n - 1, edges)), shift(neighbor), leaf};
}

Tree insert_leaf(const Tree& t, Vertex neighbor, Vertex at) {
  const std::size_t n = t.vertex_count();
  if (neighbor >= n) throw InputError(vertex_error(neighbor, n));
  if (at > n) throw InputError("insertion index " + std::to_string(at) + " out of range");
  auto shift = [at](Vertex v) { return v < at ? v : v + 1; };
  std::vector<Edge> edges;
  edges.reserve(n);
  for (auto [u, v] : t.graph().edges()) edges.emplace_back(shift(u), shift(v));
  edges.emplace_back(shift(neighbor), at);
  return Tree(Graph(n + 1, edges));
}

Tree tree_from_pruefer(std::size_t n, std::span<const Vertex> code) {
  if (n == 0) throw InputError("tree must have at least one vertex");
  if (n == 1) {
    if (!code.empty()) throw InputError("Pruefer code for n = 1 must be empty");
    return Tree(Graph(1, {}));
  }
  if (code.size() != n - 2) throw InputError("Pruefer code must have length n - 2");
  std::vector<std::size_t> remaining(n, 1);
  for (Vertex v : code) {
    if (v >= n) throw InputError(vertex_error(v, n));
    ++remaining[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--remaining[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree(Graph(n, edges));
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("tree must have at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n >= 2 ? n - 2 : 0);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (auto& v : code) v = pick(rng);
  return tree_from_pruefer(n, code);
}

namespace {

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw InputError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
      }
      n = parse_index(tokens[1], line_no);
      if (*n == 0) throw InputError("graph must have at least one vertex");
      continue;
    }
    if (tokens.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected edge 'u v'");
    }
    edges.emplace_back(parse_index(tokens[0], line_no), parse_index(tokens[1], line_no));
  }
  if (!n) throw InputError("missing header 'n <count>'");
  return Graph(*n, edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

const std::vector<Tree>& tree_catalog(std::size_t n) {
  // One representative per isomorphism class. Class counts for
  // n = 1..7 are 1, 1, 1, 2, 3, 6, 11 (25 trees in total).
  static const std::vector<std::vector<Tree>> catalog = [] {
    std::vector<std::vector<Tree>> c(kCatalogMaxVertices + 1);
    c[1] = {Tree(1, {})};
    c[2] = {Tree(2, {{0, 1}})};
    c[3] = {Tree(3, {{0, 1}, {1, 2}})};
    c[4] = {
        Tree(4, {{0, 1}, {1, 2}, {2, 3}}),  // path
        Tree(4, {{0, 1}, {0, 2}, {0, 3}}),  // star
    };
    c[5] = {
        Tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),  // path
        Tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),  // star
        Tree(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}),  // fork
    };
    c[6] = {
        Tree(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}),  // path
        Tree(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}),  // star
        Tree(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}}),  // legs 2,1,1,1
        Tree(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}}),  // legs 2,2,1
        Tree(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}}),  // legs 3,1,1
        Tree(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}),  // double star
    };
    c[7] = {
        // diameter 6
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
        // diameter 5: path 0..5 plus a leaf at position 1 or 2
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}}),
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}),
        // diameter 4: path 0..4 plus two leaves, or a 2-path at the middle
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}}),
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}}),
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}}),
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}}),
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}),
        // diameter 3: path 0..3 plus three leaves on the inner vertices
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {1, 6}}),
        Tree(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 6}}),
        // diameter 2
        Tree(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}),
    };
    return c;
  }();
  if (n == 0 || n > kCatalogMaxVertices) {
    throw InputError("tree catalog covers 1 to " + std::to_string(kCatalogMaxVertices) +
                     " vertices, got " + std::to_string(n));
  }
  return catalog[n];
}

}  // namespace chipfire
