#include "sic/graph_algorithms.hpp"

#include "sic/errors.hpp"

#include <algorithm>
#include <limits>

namespace sic {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

int lowest(VertexMask m) { return __builtin_ctzll(m); }

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  std::vector<VertexMask> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

VertexMask full_mask(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

void bron_kerbosch(const std::vector<VertexMask>& adj, VertexMask r, VertexMask p, VertexMask x,
                   std::vector<VertexMask>& out) {
  if (p == 0) {
    if (x == 0) out.push_back(r);
    return;
  }
  // Tomita pivot: the vertex of P u X with most neighbors in P.
  VertexMask px = p | x;
  int pivot = lowest(px);
  int best = -1;
  for (VertexMask m = px; m; m &= m - 1) {
    int u = lowest(m);
    int c = popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (VertexMask m = p & ~adj[pivot]; m; m &= m - 1) {
    int v = lowest(m);
    bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

void all_independent(const std::vector<VertexMask>& adj, VertexMask current, VertexMask candidates,
                     std::vector<VertexMask>& out) {
  for (VertexMask m = candidates; m; m &= m - 1) {
    int v = lowest(m);
    VertexMask next = current | bit(v);
    out.push_back(next);
    // only larger vertices may follow, keeping each set generated once
    VertexMask higher = v == 63 ? 0 : ~((VertexMask{1} << (v + 1)) - 1);
    all_independent(adj, next, candidates & higher & ~adj[v], out);
  }
}

template <typename T>
struct MaxWeightSearch {
  const std::vector<VertexMask>& adj;
  const std::vector<T>& weight;
  T best{};
  VertexMask best_set = 0;

  T bound(VertexMask cand) const {
    T s{};
    for (VertexMask m = cand; m; m &= m - 1) s += weight[lowest(m)];
    return s;
  }

  void run(VertexMask current, const T& value, VertexMask cand) {
    if (cand == 0) {
      if (value > best) {
        best = value;
        best_set = current;
      }
      return;
    }
    if (value + bound(cand) <= best) return;
    // branch on the candidate with the most candidate neighbors
    int v = lowest(cand);
    int deg = -1;
    for (VertexMask m = cand; m; m &= m - 1) {
      int u = lowest(m);
      int d = popcount(adj[u] & cand);
      if (d > deg) {
        deg = d;
        v = u;
      }
    }
    run(current | bit(v), value + weight[v], cand & ~adj[v] & ~bit(v));
    if (deg > 0) run(current, value, cand & ~bit(v));
  }
};

}  // namespace

std::vector<int> mask_to_vertices(VertexMask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

VertexMask vertices_to_mask(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

bool is_independent(const Graph& g, VertexMask set) {
  for (VertexMask m = set; m; m &= m - 1) {
    if (g.neighbor_mask(lowest(m)) & set) return false;
  }
  return true;
}

bool is_clique(const Graph& g, VertexMask set) {
  for (VertexMask m = set; m; m &= m - 1) {
    int v = lowest(m);
    if (((g.neighbor_mask(v) | bit(v)) & set) != set) return false;
  }
  return true;
}

void sort_sets(std::vector<VertexMask>& sets) {
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    int ca = popcount(a), cb = popcount(b);
    if (ca != cb) return ca < cb;
    VertexMask diff = a ^ b;
    return diff != 0 && (diff & (~diff + 1) & a) != 0;
  });
}

IndependentSetFamily independent_sets(const Graph& g, IndependentSetFamily::Mode mode) {
  if (g.order() > kIndependentSetGuard) {
    throw CapacityError("independent set enumeration is limited to " + std::to_string(kIndependentSetGuard) +
                        " vertices");
  }
  IndependentSetFamily fam;
  fam.mode = mode;
  auto adj = adjacency_masks(g);
  if (mode == IndependentSetFamily::Mode::AllNonempty) {
    all_independent(adj, 0, full_mask(g.order()), fam.sets);
  } else if (g.order() > 0) {
    std::vector<VertexMask> co(adj.size());
    for (int v = 0; v < g.order(); ++v) co[v] = full_mask(g.order()) & ~adj[v] & ~bit(v);
    bron_kerbosch(co, 0, full_mask(g.order()), 0, fam.sets);
  }
  sort_sets(fam.sets);
  return fam;
}

std::vector<VertexMask> max_cliques(const Graph& g) {
  if (g.order() > kCliqueGuard) {
    throw CapacityError("maximal clique enumeration is limited to " + std::to_string(kCliqueGuard) + " vertices");
  }
  std::vector<VertexMask> out;
  if (g.order() == 0) return out;
  bron_kerbosch(adjacency_masks(g), 0, full_mask(g.order()), 0, out);
  sort_sets(out);
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (VertexMask c : max_cliques(g)) best = std::max(best, popcount(c));
  return best;
}

WeightedIndependentSet alpha_weighted(const Graph& g, const WeightVector& w) {
  const int n = g.order();
  if (n > kIndependentSetGuard) {
    throw CapacityError("weighted independence number is limited to " + std::to_string(kIndependentSetGuard) +
                        " vertices");
  }
  if (static_cast<int>(w.size()) != n) throw ArgumentError("weight vector length differs from vertex count");
  auto adj = adjacency_masks(g);

  // Scale to a common denominator; use machine integers when the total fits.
  Integer lcm = 1;
  for (const auto& x : w.entries()) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  std::vector<Integer> scaled;
  Integer total = 0;
  for (const auto& x : w.entries()) {
    Integer s = boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x));
    total += s;
    scaled.push_back(s);
  }
  WeightedIndependentSet result;
  if (total < Integer(std::numeric_limits<long long>::max() / 4)) {
    std::vector<long long> iw;
    for (const auto& s : scaled) iw.push_back(s.convert_to<long long>());
    MaxWeightSearch<long long> search{adj, iw};
    search.best = -1;
    search.run(0, 0, full_mask(n));
    result.value = Rational(Integer(search.best), lcm);
    result.set = search.best_set;
  } else {
    MaxWeightSearch<Rational> search{adj, w.entries()};
    search.best = -1;
    search.run(0, Rational(0), full_mask(n));
    result.value = search.best;
    result.set = search.best_set;
  }
  return result;
}

int alpha(const Graph& g) {
  return alpha_weighted(g, WeightVector::unit(g.order())).value.convert_to<int>();
}

}  // namespace sic
