#pragma once

#include "sic/exact_lp.hpp"
#include "sic/graph.hpp"
#include "sic/graph_algorithms.hpp"
#include "sic/rational.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace sic {

/// Graph on the nonempty independent sets of g, two sets adjacent iff their
/// union is not independent. Vertex k is labeled sets[k] (sort_sets order).
struct ISGraph {
  Graph graph;
  std::vector<VertexMask> sets;
  std::unordered_map<VertexMask, int> index;

  /// Index of the set, or -1 if it is not a nonempty independent set.
  int find(VertexMask set) const;
};

inline constexpr int kRankPolytopeGuard = 10;

/// Throws CapacityError for n > 10.
ISGraph independent_set_graph(const Graph& g);

/// Integer inequality sum_k coeffs[k] x_k <= rhs.
struct SparseInequality {
  std::vector<std::pair<int, int>> coeffs;  // (variable, coefficient), sorted by variable
  int rhs = 0;
  friend auto operator<=>(const SparseInequality&, const SparseInequality&) = default;
};

/// Normalized subspace dimensions x_I, one per nonempty independent set, with
/// x_empty = 1 and x_I = 0 for dependent I substituted. Nonnegativity is implicit.
struct HPolytope {
  ISGraph is_graph;
  std::vector<SparseInequality> rows;
  /// Row counts per family: clique, union/intersection, clique-with-pair, upper bounds.
  int family_counts[4] = {0, 0, 0, 0};

  int num_vars() const { return static_cast<int>(is_graph.sets.size()); }
  /// Maximize objective . x over the polytope.
  LinearProgram to_lp(const std::vector<Rational>& objective) const;
};

inline constexpr std::size_t kRankPolytopeRowCap = 1000000;

/// Full inequality system. Throws CapacityError for n > 10 or when the clique
/// families exceed kRankPolytopeRowCap rows (use lrank_max on the graph instead).
HPolytope lrank_hrep(const Graph& g);

/// Exact maximum of sum_i w_i x_{i} (singleton coordinates) over the explicit system.
Rational lrank_max(const HPolytope& poly, const std::vector<Rational>& w);

struct LrankSolveStats {
  int rounds = 0;
  std::size_t rows = 0;  // rows in the final program
};

/// Same maximum without materializing the clique families: the union and
/// bound rows are kept explicitly, clique rows are added while an exact
/// maximum-weight clique search finds one violated by the LP optimum.
Rational lrank_max(const Graph& g, const std::vector<Rational>& w, LrankSolveStats* stats = nullptr);

/// Facet w . x <= c of STAB(g), with integer coefficients of gcd 1.
struct Facet {
  std::vector<Integer> w;
  Integer c;
  /// The vertices with positive weight form a clique of g.
  bool trivial = false;
};

inline constexpr int kFacetGuard = 8;

/// All facets of the stable set polytope by exact double description.
/// Throws CapacityError for n > 8.
std::vector<Facet> stab_facets(const Graph& g);

struct FacetCheck {
  Facet facet;
  Rational lrank_maximum;
  bool holds = false;
};

struct LrankReport {
  bool equal = false;
  std::vector<FacetCheck> checks;  // nontrivial facets only
};

/// LRANK(g) = STAB(g), decided through one exact LP per nontrivial facet.
LrankReport lrank_equals_stab(const Graph& g);

std::string to_string(const Facet& f);

}  // namespace sic
