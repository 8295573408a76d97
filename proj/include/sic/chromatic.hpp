#pragma once

#include "sic/graph.hpp"
#include "sic/graph_algorithms.hpp"
#include "sic/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sic {

/// Exact weighted fractional chromatic number with both certificates.
struct FractionalChromatic {
  Rational value;
  /// Columns of the covering LP: the maximal independent sets, in sort_sets order.
  std::vector<VertexMask> sets;
  /// Fractional cover x_I >= 0 with sum_{I containing i} x_I >= r_i.
  std::vector<Rational> cover;
  /// Fractional clique y >= 0 with y(I) <= 1 for every independent set I.
  std::vector<Rational> clique_weights;
};

inline constexpr int kChromaticGuard = 32;

/// chi_f(G, r) = min sum_I x_I  s.t.  sum_{I containing i} x_I >= r_i, x >= 0,
/// over maximal independent sets I. Solved exactly; the fractional clique is
/// the LP dual. Throws CapacityError for n > 32.
FractionalChromatic chi_f(const Graph& g, const WeightVector& r);
Rational chi_f_value(const Graph& g, const WeightVector& r);

/// chi_f(G - e, r) for every edge e of G.
std::map<Edge, Rational> chi_f_all_edge_deletions(const Graph& g, const WeightVector& r);

/// Exact re-check of both certificates against g. Empty string when valid.
std::string verify_chi_f(const Graph& g, const WeightVector& r, const FractionalChromatic& result);

}  // namespace sic
