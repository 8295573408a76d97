#pragma once

#include "sic/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sic {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Stored as a dense adjacency matrix; every graph in scope has at most a few
/// hundred vertices. Edges are reported sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws ArgumentError on self-loops or out-of-range endpoints; duplicates merge.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;

  /// Adjacency row as a bit mask; requires n <= 64.
  std::uint64_t neighbor_mask(int v) const;

  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Nonnegative vertex weights w, or integral ranks r >= 1.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> entries);
  static WeightVector unit(int n) { return uniform(n, Rational(1)); }
  static WeightVector uniform(int n, const Rational& value);
  static WeightVector from_ints(std::span<const int> values);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_rank_vector() const;
  /// Entries as ranks; throws ArgumentError unless every entry is an integer >= 1.
  std::vector<int> ranks() const;
  std::vector<double> as_doubles() const;

  WeightVector scaled(const Rational& factor) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> entries_;
};

Graph complement(const Graph& g);
/// True iff every vertex pair is joined by a path. The graph on one vertex is connected.
bool is_connected(const Graph& g);
/// Graph without the edge e; throws ArgumentError if e is not an edge.
Graph remove_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

/// Replaces vertex k by a clique of size r_k; copies of adjacent vertices are
/// joined completely. Vertex (k, i) receives index sum_{l<k} r_l + i, i.e. the
/// lexicographic order of (k, i).
Graph blowup(const Graph& g, const WeightVector& ranks);
Graph blowup(const Graph& g, std::span<const int> ranks);

Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Combines vertices a and b into one vertex adjacent to the union of their
/// neighborhoods; the merged vertex takes index min(a, b) and the larger index
/// is removed. Requires a and b nonadjacent.
Graph merge_vertices(const Graph& g, int a, int b);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);

}  // namespace sic
