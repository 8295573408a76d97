#pragma once

#include "sic/graph.hpp"
#include "sic/rational.hpp"

#include <cstdint>
#include <vector>

namespace sic {

/// Vertex subset as a bit mask (vertex v <-> bit v).
using VertexMask = std::uint64_t;

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const int> vertices);
inline int popcount(VertexMask m) { return __builtin_popcountll(m); }

bool is_independent(const Graph& g, VertexMask set);
bool is_clique(const Graph& g, VertexMask set);

/// Sorts by size, then lexicographically by the sorted vertex lists.
void sort_sets(std::vector<VertexMask>& sets);

struct IndependentSetFamily {
  enum class Mode { AllNonempty, Maximal };

  Mode mode = Mode::AllNonempty;
  std::vector<VertexMask> sets;
};

inline constexpr int kIndependentSetGuard = 32;
inline constexpr int kCliqueGuard = 64;

/// Complete family for the requested mode, ordered by sort_sets.
/// Throws CapacityError for n > 32.
IndependentSetFamily independent_sets(const Graph& g, IndependentSetFamily::Mode mode);

/// All maximal cliques (Bron-Kerbosch with pivoting), ordered by sort_sets.
/// Throws CapacityError for n > 64.
std::vector<VertexMask> max_cliques(const Graph& g);

int clique_number(const Graph& g);

struct WeightedIndependentSet {
  Rational value;
  VertexMask set = 0;
};

/// Maximum of w over the independent sets, with one maximizing set.
/// Throws CapacityError for n > 32, ArgumentError for negative weights.
WeightedIndependentSet alpha_weighted(const Graph& g, const WeightVector& w);

/// Unweighted independence number.
int alpha(const Graph& g);

}  // namespace sic
