#include "sic/rank_polytope.hpp"

#include "sic/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sic {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> adjacency_bits(const Graph& g) {
  const int n = g.order();
  std::vector<Bits> adj(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
  for (const Edge& e : g.edges()) {
    adj[e.u].set(e.v);
    adj[e.v].set(e.u);
  }
  return adj;
}

// Bron-Kerbosch with Tomita pivoting over the vertices in `candidates`.
void maximal_cliques(const std::vector<Bits>& adj, Bits candidates, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> r;
  std::function<void(Bits, Bits)> expand = [&](Bits p, Bits x) {
    if (p.none() && x.none()) {
      emit(r);
      return;
    }
    Bits px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = (p & adj[pivot]).count();
    for (std::size_t u = px.find_next(pivot); u != Bits::npos; u = px.find_next(u)) {
      std::size_t c = (p & adj[u]).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    Bits todo = p - adj[pivot];
    for (std::size_t v = todo.find_first(); v != Bits::npos; v = todo.find_next(v)) {
      r.push_back(static_cast<int>(v));
      expand(p & adj[v], x & adj[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  };
  expand(std::move(candidates), Bits(adj.size()));
}

// Maximum-weight clique among the candidate vertices with positive weight,
// extended greedily to a maximal clique of the candidates.
std::pair<Rational, std::vector<int>> max_weight_clique(const std::vector<Bits>& adj, const Bits& candidates,
                                                        const std::vector<Rational>& x) {
  std::vector<int> verts;
  for (std::size_t v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v))
    if (x[v] > 0) verts.push_back(static_cast<int>(v));
  std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return x[a] > x[b]; });

  Rational best = 0;
  std::vector<int> best_set, cur;
  std::function<void(std::size_t, const Rational&, const Rational&)> search = [&](std::size_t from, const Rational& value,
                                                                                 const Rational& remaining) {
    if (value > best) {
      best = value;
      best_set = cur;
    }
    Rational rest = remaining;
    for (std::size_t i = from; i < verts.size(); ++i) {
      if (value + rest <= best) return;
      rest -= x[verts[i]];
      int v = verts[i];
      bool ok = std::all_of(cur.begin(), cur.end(), [&](int u) { return adj[u][v]; });
      if (!ok) continue;
      cur.push_back(v);
      search(i + 1, value + x[v], rest);
      cur.pop_back();
    }
  };
  Rational total = 0;
  for (int v : verts) total += x[v];
  search(0, Rational(0), total);

  Bits room = candidates;
  for (int v : best_set) room &= adj[v];
  for (std::size_t v = room.find_first(); v != Bits::npos; v = room.find_next(v)) {
    if (!room[v]) continue;
    best_set.push_back(static_cast<int>(v));
    room &= adj[v];
  }
  std::sort(best_set.begin(), best_set.end());
  return {best, best_set};
}

class RowBuilder {
 public:
  void add(const std::map<int, int>& terms, int rhs, int family, HPolytope& poly) {
    SparseInequality row;
    row.rhs = rhs;
    bool any_positive = false;
    for (auto [var, c] : terms) {
      if (c == 0) continue;
      row.coeffs.emplace_back(var, c);
      any_positive |= c > 0;
    }
    if (!any_positive && rhs >= 0) return;  // implied by x >= 0
    if (seen_.insert(row).second) {
      poly.rows.push_back(std::move(row));
      poly.family_counts[family]++;
      if (poly.rows.size() > kRankPolytopeRowCap) {
        throw CapacityError("LRANK system exceeds " + std::to_string(kRankPolytopeRowCap) + " rows");
      }
    }
  }

 private:
  std::set<SparseInequality> seen_;
};

// Double description: extreme rays of {h : h . (1, p) >= 0 for every independent set p}.
struct Ray {
  std::vector<Integer> h;
  Bits zeros;
};

void normalize(std::vector<Integer>& h) {
  Integer g = 0;
  for (const Integer& v : h) g = boost::multiprecision::gcd(g, v);
  if (g > 1)
    for (Integer& v : h) v /= g;
}

Integer dot(const std::vector<Integer>& h, VertexMask point) {
  Integer s = h[0];
  for (int i = 0; point >> i; ++i)
    if ((point >> i) & 1) s += h[i + 1];
  return s;
}

}  // namespace

namespace {

// dim I1 + dim I2 <= dim(I1 cap I2) + dim(I1 cup I2)
void add_union_rows(RowBuilder& rows, HPolytope& poly) {
  const ISGraph& isg = poly.is_graph;
  const int m = poly.num_vars();
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) {
      VertexMask a = isg.sets[k], b = isg.sets[l];
      std::map<int, int> t;
      t[k] += 1;
      t[l] += 1;
      int rhs = 0;
      if ((a & b) == 0) {
        rhs = 1;
      } else {
        t[isg.find(a & b)] -= 1;
      }
      int u = isg.find(a | b);
      if (u >= 0) t[u] -= 1;
      rows.add(t, rhs, 1, poly);
    }
  }
}

}  // namespace

int ISGraph::find(VertexMask set) const {
  auto it = index.find(set);
  return it == index.end() ? -1 : it->second;
}

ISGraph independent_set_graph(const Graph& g) {
  if (g.order() > kRankPolytopeGuard) {
    throw CapacityError("independent set graph is limited to " + std::to_string(kRankPolytopeGuard) + " vertices");
  }
  ISGraph out;
  out.sets = independent_sets(g, IndependentSetFamily::Mode::AllNonempty).sets;
  const int m = static_cast<int>(out.sets.size());
  for (int k = 0; k < m; ++k) out.index.emplace(out.sets[k], k);
  out.graph = Graph(m);
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l)
      if (!is_independent(g, out.sets[k] | out.sets[l])) out.graph.add_edge(k, l);
  return out;
}

LinearProgram HPolytope::to_lp(const std::vector<Rational>& objective) const {
  LinearProgram lp;
  lp.num_vars = num_vars();
  lp.sense = Sense::Maximize;
  lp.objective = objective;
  for (const SparseInequality& row : rows) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(lp.num_vars), Rational(0));
    for (auto [var, c] : row.coeffs) coeffs[var] = c;
    lp.add(std::move(coeffs), Relation::LessEqual, Rational(row.rhs));
  }
  return lp;
}

HPolytope lrank_hrep(const Graph& g) {
  HPolytope poly;
  poly.is_graph = independent_set_graph(g);
  const ISGraph& isg = poly.is_graph;
  const int m = poly.num_vars();
  auto adj = adjacency_bits(isg.graph);
  RowBuilder rows;

  // pairwise orthogonal subspaces along a clique
  Bits all(static_cast<std::size_t>(m));
  all.set();
  maximal_cliques(adj, all, [&](const std::vector<int>& c) {
    std::map<int, int> t;
    for (int v : c) t[v] += 1;
    rows.add(t, 1, 0, poly);
  });

  add_union_rows(rows, poly);

  // I1 + I2 orthogonal to every set of a clique in their common neighborhood;
  // the maximal such cliques dominate the others.
  for (int k = 0; k < m; ++k) {
    for (int l = k + 1; l < m; ++l) {
      if (adj[k][l]) continue;
      Bits common = adj[k] & adj[l];
      if (common.none()) continue;
      int u = isg.find(isg.sets[k] | isg.sets[l]);
      maximal_cliques(adj, common, [&](const std::vector<int>& c) {
        std::map<int, int> t;
        for (int v : c) t[v] += 1;
        t[k] += 1;
        t[l] += 1;
        t[u] -= 1;
        rows.add(t, 1, 2, poly);
      });
    }
  }

  for (int k = 0; k < m; ++k) rows.add({{k, 1}}, 1, 3, poly);
  return poly;
}

Rational lrank_max(const Graph& g, const std::vector<Rational>& w, LrankSolveStats* stats) {
  HPolytope poly;
  poly.is_graph = independent_set_graph(g);
  const ISGraph& isg = poly.is_graph;
  const int m = poly.num_vars();
  auto adj = adjacency_bits(isg.graph);
  RowBuilder rows;
  add_union_rows(rows, poly);
  for (int k = 0; k < m; ++k) rows.add({{k, 1}}, 1, 3, poly);

  std::vector<Rational> objective(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    int k = isg.find(VertexMask{1} << i);
    if (k < 0) throw ArgumentError("weight vector longer than the vertex set");
    objective[k] = w[i];
  }
  Bits all(static_cast<std::size_t>(m));
  all.set();

  for (int round = 1;; ++round) {
    ExactLPSolution sol = solve_lp_exact(poly.to_lp(objective));
    if (sol.status != LPStatus::Optimal) throw NumericalError("LRANK program is " + to_string(sol.status));
    const std::vector<Rational>& x = sol.primal;
    std::size_t before = poly.rows.size();

    auto [weight, clique] = max_weight_clique(adj, all, x);
    if (weight > 1) {
      std::map<int, int> t;
      for (int v : clique) t[v] += 1;
      rows.add(t, 1, 0, poly);
    }
    for (int k = 0; k < m; ++k) {
      for (int l = k + 1; l < m; ++l) {
        if (adj[k][l]) continue;
        int u = isg.find(isg.sets[k] | isg.sets[l]);
        Rational base = x[k] + x[l] - x[u];
        if (base <= 0) continue;
        Bits common = adj[k] & adj[l];
        if (common.none()) continue;
        auto [cw, c] = max_weight_clique(adj, common, x);
        if (cw + base <= 1) continue;
        std::map<int, int> t;
        for (int v : c) t[v] += 1;
        t[k] += 1;
        t[l] += 1;
        t[u] -= 1;
        rows.add(t, 1, 2, poly);
      }
    }
    if (poly.rows.size() == before) {
      if (stats) {
        stats->rounds = round;
        stats->rows = poly.rows.size();
      }
      return sol.value;
    }
  }
}

Rational lrank_max(const HPolytope& poly, const std::vector<Rational>& w) {
  std::vector<Rational> objective(static_cast<std::size_t>(poly.num_vars()), Rational(0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    int k = poly.is_graph.find(VertexMask{1} << i);
    if (k < 0) throw ArgumentError("weight vector longer than the vertex set");
    objective[k] = w[i];
  }
  LinearProgram lp = poly.to_lp(objective);
  ExactLPSolution sol = solve_lp_exact(lp);
  if (sol.status != LPStatus::Optimal) throw NumericalError("LRANK program is " + to_string(sol.status));
  return sol.value;
}

std::vector<Facet> stab_facets(const Graph& g) {
  const int n = g.order();
  if (n > kFacetGuard) throw CapacityError("facet enumeration is limited to " + std::to_string(kFacetGuard) + " vertices");

  // Generators: the empty set, the singletons, then the rest in sort_sets order.
  std::vector<VertexMask> points{0};
  for (int i = 0; i < n; ++i) points.push_back(VertexMask{1} << i);
  for (VertexMask s : independent_sets(g, IndependentSetFamily::Mode::AllNonempty).sets)
    if (popcount(s) >= 2) points.push_back(s);
  const std::size_t total = points.size();
  const std::size_t dim = static_cast<std::size_t>(n) + 1;

  // The first n + 1 generators form a basis; its dual rays start the iteration.
  std::vector<Ray> rays;
  {
    Ray r{std::vector<Integer>(dim, Integer(-1)), Bits(total)};
    r.h[0] = 1;
    for (int i = 1; i <= n; ++i) r.zeros.set(static_cast<std::size_t>(i));
    rays.push_back(std::move(r));
    for (int i = 1; i <= n; ++i) {
      Ray e{std::vector<Integer>(dim, Integer(0)), Bits(total)};
      e.h[static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j <= n; ++j)
        if (j != i) e.zeros.set(static_cast<std::size_t>(j));
      rays.push_back(std::move(e));
    }
  }

  for (std::size_t gi = dim; gi < total; ++gi) {
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(rays[k].h, points[gi]);
      if (val[k] > 0) {
        pos.push_back(k);
      } else if (val[k] < 0) {
        neg.push_back(k);
      } else {
        rays[k].zeros.set(gi);
      }
    }
    if (neg.empty()) continue;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (val[k] >= 0) next.push_back(rays[k]);
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.is_subset_of(rays[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{std::vector<Integer>(dim), common};
        for (std::size_t j = 0; j < dim; ++j) r.h[j] = val[p] * rays[q].h[j] - val[q] * rays[p].h[j];
        normalize(r.h);
        r.zeros.set(gi);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  for (const Ray& r : rays) {
    Facet f;
    f.c = r.h[0];
    VertexMask support = 0;
    for (int i = 0; i < n; ++i) {
      f.w.push_back(-r.h[static_cast<std::size_t>(i) + 1]);
      if (f.w.back() > 0) support |= VertexMask{1} << i;
    }
    f.trivial = is_clique(g, support);
    // every generator must satisfy the inequality
    for (VertexMask p : points) {
      if (dot(r.h, p) < 0) throw NumericalError("double description produced an invalid facet");
    }
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.w, a.c) < std::tie(b.w, b.c);
  });
  return facets;
}

LrankReport lrank_equals_stab(const Graph& g) {
  LrankReport report;
  report.equal = true;
  std::vector<Facet> facets = stab_facets(g);
  bool any_nontrivial = std::any_of(facets.begin(), facets.end(), [](const Facet& f) { return !f.trivial; });
  if (!any_nontrivial) return report;
  for (const Facet& f : facets) {
    if (f.trivial) continue;
    std::vector<Rational> w(f.w.begin(), f.w.end());
    FacetCheck check{f, lrank_max(g, w), false};
    check.holds = check.lrank_maximum <= Rational(f.c);
    report.equal &= check.holds;
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string to_string(const Facet& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.w.size(); ++i) {
    if (f.w[i] == 0) continue;
    os << (first ? "" : " + ") << f.w[i] << "*x" << i;
    first = false;
  }
  if (first) os << "0";
  os << " <= " << f.c;
  return os.str();
}

}  // namespace sic
