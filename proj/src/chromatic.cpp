#include "sic/chromatic.hpp"

#include "sic/errors.hpp"
#include "sic/exact_lp.hpp"

namespace sic {

FractionalChromatic chi_f(const Graph& g, const WeightVector& r) {
  const int n = g.order();
  if (n > kChromaticGuard) {
    throw CapacityError("fractional chromatic number is limited to " + std::to_string(kChromaticGuard) + " vertices");
  }
  if (static_cast<int>(r.size()) != n) throw ArgumentError("weight vector length differs from vertex count");

  FractionalChromatic out;
  out.sets = independent_sets(g, IndependentSetFamily::Mode::Maximal).sets;
  if (n == 0) return out;

  // The fractional clique LP  max r.y  s.t. y(I) <= 1 for every maximal
  // independent set I  starts from a feasible slack basis; its duals are the cover.
  LinearProgram lp;
  lp.num_vars = n;
  lp.sense = Sense::Maximize;
  lp.objective = r.entries();
  for (VertexMask set : out.sets) {
    std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
    for (int v : mask_to_vertices(set)) row[v] = 1;
    lp.add(std::move(row), Relation::LessEqual, Rational(1));
  }
  ExactLPSolution sol = solve_lp_exact(lp);
  if (sol.status != LPStatus::Optimal) throw NumericalError("fractional clique LP is not optimal");
  out.value = sol.value;
  out.clique_weights = std::move(sol.primal);
  out.cover = std::move(sol.dual);
  return out;
}

Rational chi_f_value(const Graph& g, const WeightVector& r) { return chi_f(g, r).value; }

std::map<Edge, Rational> chi_f_all_edge_deletions(const Graph& g, const WeightVector& r) {
  std::map<Edge, Rational> out;
  for (const Edge& e : g.edges()) out.emplace(e, chi_f_value(remove_edge(g, e), r));
  return out;
}

std::string verify_chi_f(const Graph& g, const WeightVector& r, const FractionalChromatic& result) {
  const int n = g.order();
  if (result.cover.size() != result.sets.size()) return "cover length differs from column count";
  if (static_cast<int>(result.clique_weights.size()) != n && n > 0) return "clique weight vector has wrong length";
  std::vector<Rational> covered(static_cast<std::size_t>(n), Rational(0));
  Rational primal = 0;
  for (std::size_t k = 0; k < result.sets.size(); ++k) {
    if (result.cover[k] < 0) return "negative cover entry";
    if (result.cover[k] == 0) continue;
    if (!is_independent(g, result.sets[k])) return "cover uses a non-independent set";
    primal += result.cover[k];
    for (int v : mask_to_vertices(result.sets[k])) covered[v] += result.cover[k];
  }
  for (int v = 0; v < n; ++v) {
    if (covered[v] < r[v]) return "vertex " + std::to_string(v) + " is under-covered";
  }
  Rational dual = 0;
  for (int v = 0; v < n; ++v) {
    if (result.clique_weights[v] < 0) return "negative clique weight";
    dual += r[v] * result.clique_weights[v];
  }
  // y(I) <= 1 on all maximal independent sets implies it on all independent sets
  for (VertexMask set : independent_sets(g, IndependentSetFamily::Mode::Maximal).sets) {
    Rational load = 0;
    for (int v : mask_to_vertices(set)) load += result.clique_weights[v];
    if (load > 1) return "fractional clique overloads an independent set";
  }
  if (primal != result.value) return "cover size differs from value";
  if (dual != result.value) return "fractional clique weight differs from value";
  return {};
}

}  // namespace sic
