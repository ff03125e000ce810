#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chipfire {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized as (min, max) and sorted lexicographically;
/// adjacency lists are sorted ascending. Immutable after construction.
class Graph {
 public:
  /// Throws InputError on n == 0, self-loops, duplicate edges or
  /// out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Throws InputError when v is out of range.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A connected acyclic Graph. Construction validates; there is no way to
/// obtain a Tree that is not a tree.
class Tree {
 public:
  explicit Tree(Graph g);
  Tree(std::size_t n, std::initializer_list<Edge> edges) : Tree(Graph(n, edges)) {}

  const Graph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return graph_.neighbors(v); }
  bool is_leaf(Vertex v) const { return vertex_count() > 1 && degree(v) == 1; }

  /// Leaves in ascending index order (empty for the one-vertex tree).
  std::vector<Vertex> leaves() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Graph graph_;
};

/// Returns std::nullopt when g is not a tree.
std::optional<Tree> as_tree(const Graph& g);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Graph Laplacian: degree on the diagonal, -1 per edge.
IntMatrix laplacian(const Graph& g);

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

inline constexpr std::size_t kDefaultSubtreeGuard = 20;

/// Every nonempty vertex subset of t that induces a connected subgraph,
/// each exactly once. Subsets are sorted ascending; the list is ordered by
/// smallest member, then by generation order. Throws GuardExceeded when
/// t has more than size_limit vertices.
std::vector<std::vector<Vertex>> enumerate_subtrees(
    const Tree& t, std::size_t size_limit = kDefaultSubtreeGuard);

/// Result of deleting a leaf. Vertices above the leaf shift down by one.
struct LeafRemoval {
  Tree tree;
  /// The leaf's former neighbor, in the reduced tree's indexing.
  Vertex neighbor;
  Vertex removed;

  /// Index in the original tree of reduced-tree vertex v.
  Vertex original_index(Vertex v) const noexcept { return v < removed ? v : v + 1; }
  /// Index in the reduced tree of original vertex v; nullopt for the leaf.
  std::optional<Vertex> reduced_index(Vertex v) const noexcept {
    if (v == removed) return std::nullopt;
    return v < removed ? v : v - 1;
  }
};

/// Throws InputError when leaf is not a leaf (including the one-vertex tree).
LeafRemoval remove_leaf(const Tree& t, Vertex leaf);

/// Inverse of remove_leaf: inserts a new vertex at index `at` (shifting
/// vertices >= at up by one) joined to `neighbor`, given in t's indexing.
Tree insert_leaf(const Tree& t, Vertex neighbor, Vertex at);

/// Uniformly random labeled tree on n vertices via Pruefer decoding.
/// Deterministic for a fixed seed.
Tree random_tree(std::size_t n, std::uint64_t seed);

/// Decodes a Pruefer sequence of length n-2 over [0, n).
Tree tree_from_pruefer(std::size_t n, std::span<const Vertex> code);

/// Text format: first line "n <count>", then one "u v" line per edge.
/// Blank lines and lines starting with '#' are ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// The non-isomorphic unlabeled trees on n vertices, 1 <= n <= 7.
/// Throws InputError outside that range.
const std::vector<Tree>& tree_catalog(std::size_t n);
inline constexpr std::size_t kCatalogMaxVertices = 7;

}  // namespace chipfire
