#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kpartite {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown for malformed input: out-of-range vertices, loops, bad files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation is asked to go beyond its configured size cap.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Sorted set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  void insert(Vertex v);
  void erase(Vertex v);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as sorted, duplicate-free neighbor lists. Instances are
/// immutable once constructed; every mutating operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges are merged. Loops and out-of-range endpoints throw InvalidInput.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] int order() const { return static_cast<int>(adjacency_.size()); }
  [[nodiscard]] std::size_t size() const { return edge_count_; }
  [[nodiscard]] int degree(Vertex v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }
  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  [[nodiscard]] bool contains_vertex(Vertex v) const { return v >= 0 && v < order(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::vector<int> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Named constructors for the usual small families.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
/// K_{a_1,...,a_k}; parts occupy consecutive index blocks in the given order.
Graph complete_multipartite(std::span<const int> parts);
/// K_{a_1} u ... u K_{a_k}; cliques occupy consecutive index blocks.
Graph clique_union(std::span<const int> sizes);

Graph complement(const Graph& g);
/// Vertices of s are relabeled 0..|s|-1 in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph disjoint_union(std::span<const Graph> parts);
/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

}  // namespace kpartite
