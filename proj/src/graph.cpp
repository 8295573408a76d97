#include "sic/graph.hpp"

#include "sic/errors.hpp"

#include <numeric>

namespace sic {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw ArgumentError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph on " +
                        std::to_string(n_) + " vertices");
  }
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int j = 0; j < n_; ++j) d += adjacent(v, j);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (adjacent(v, j)) out.push_back(j);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  if (n_ > 64) throw CapacityError("bit-mask adjacency requires at most 64 vertices");
  std::uint64_t mask = 0;
  const std::uint8_t* row = &adj_[static_cast<std::size_t>(v) * n_];
  for (int j = 0; j < n_; ++j) {
    if (row[j]) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw ArgumentError("self-loop at vertex " + std::to_string(i));
  auto& a = adj_[static_cast<std::size_t>(i) * n_ + j];
  if (!a) {
    a = 1;
    adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
    ++m_;
  }
}

void Graph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  auto& a = adj_[static_cast<std::size_t>(i) * n_ + j];
  if (a) {
    a = 0;
    adj_[static_cast<std::size_t>(j) * n_ + i] = 0;
    --m_;
  }
}

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e < 0) throw ArgumentError("weights must be nonnegative");
  }
}

WeightVector WeightVector::uniform(int n, const Rational& value) {
  return WeightVector(std::vector<Rational>(static_cast<std::size_t>(n), value));
}

WeightVector WeightVector::from_ints(std::span<const int> values) {
  std::vector<Rational> e;
  e.reserve(values.size());
  for (int v : values) e.emplace_back(v);
  return WeightVector(std::move(e));
}

bool WeightVector::is_rank_vector() const {
  for (const auto& e : entries_) {
    if (!is_integral(e) || e < 1) return false;
  }
  return true;
}

std::vector<int> WeightVector::ranks() const {
  if (!is_rank_vector()) throw ArgumentError("ranks must be integers >= 1");
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(boost::multiprecision::numerator(e).convert_to<int>());
  return out;
}

std::vector<double> WeightVector::as_doubles() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(to_double(e));
  return out;
}

WeightVector WeightVector::scaled(const Rational& factor) const {
  std::vector<Rational> e = entries_;
  for (auto& x : e) x *= factor;
  return WeightVector(std::move(e));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (!seen[j] && g.adjacent(v, j)) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

Graph remove_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw ArgumentError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
  }
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

Graph add_edge(const Graph& g, Edge e) {
  Graph out = g;
  out.add_edge(e.u, e.v);
  return out;
}

Graph blowup(const Graph& g, std::span<const int> ranks) {
  const int n = g.order();
  if (static_cast<int>(ranks.size()) != n) throw ArgumentError("rank vector length differs from vertex count");
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    if (ranks[k] < 1) throw ArgumentError("ranks must be >= 1");
    offset[k + 1] = offset[k] + ranks[k];
  }
  Graph out(offset[n]);
  for (int k = 0; k < n; ++k) {
    for (int i = offset[k]; i < offset[k + 1]; ++i) {
      for (int j = i + 1; j < offset[k + 1]; ++j) out.add_edge(i, j);
    }
  }
  for (const Edge& e : g.edges()) {
    for (int i = offset[e.u]; i < offset[e.u + 1]; ++i) {
      for (int j = offset[e.v]; j < offset[e.v + 1]; ++j) out.add_edge(i, j);
    }
  }
  return out;
}

Graph blowup(const Graph& g, const WeightVector& ranks) {
  std::vector<int> r = ranks.ranks();
  return blowup(g, std::span<const int>(r));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.adjacent(vertices[a], vertices[b])) out.add_edge(a, b);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

Graph merge_vertices(const Graph& g, int a, int b) {
  if (a == b) throw ArgumentError("cannot merge a vertex with itself");
  if (g.adjacent(a, b)) throw ArgumentError("cannot merge adjacent vertices");
  const int keep = std::min(a, b);
  const int drop = std::max(a, b);
  const int n = g.order();
  auto new_index = [&](int v) {
    if (v == drop) return keep;
    return v > drop ? v - 1 : v;
  };
  Graph out(n - 1);
  for (const Edge& e : g.edges()) {
    int u = new_index(e.u);
    int v = new_index(e.v);
    if (u != v) out.add_edge(u, v);
  }
  return out;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycles need at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace sic
