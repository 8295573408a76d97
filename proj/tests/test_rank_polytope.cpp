#include "doctest.h"

#include "sic/enumerate.hpp"
#include "sic/errors.hpp"
#include "sic/rank_polytope.hpp"
#include "sic/theta.hpp"

#include <random>

using namespace sic;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Rank over the rationals by Gaussian elimination.
int rank_of(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[static_cast<std::size_t>(rank)][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[static_cast<std::size_t>(rank)][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<VertexMask> all_independent_including_empty(const Graph& g) {
  std::vector<VertexMask> pts{0};
  for (VertexMask s : independent_sets(g, IndependentSetFamily::Mode::AllNonempty).sets) pts.push_back(s);
  return pts;
}

}  // namespace

TEST_CASE("independent set graph examples") {
  auto c5 = independent_set_graph(cycle_graph(5));
  CHECK(c5.sets.size() == 10);
  auto k3 = independent_set_graph(complete_graph(3));
  CHECK(k3.sets.size() == 3);
  CHECK(k3.graph == complete_graph(3));
  auto e2 = independent_set_graph(empty_graph(2));
  CHECK(e2.sets.size() == 3);
  CHECK(e2.graph.size() == 0);
  CHECK_THROWS_AS(independent_set_graph(empty_graph(11)), CapacityError);
}

TEST_CASE("LRANK systems of tiny graphs") {
  auto k2 = lrank_hrep(complete_graph(2));
  CHECK(k2.num_vars() == 2);
  SparseInequality clique{{{0, 1}, {1, 1}}, 1};
  CHECK(std::find(k2.rows.begin(), k2.rows.end(), clique) != k2.rows.end());

  auto single = lrank_hrep(Graph(1));
  CHECK(single.num_vars() == 1);
  CHECK(single.rows.size() == 1);
  CHECK(single.rows[0] == SparseInequality{{{0, 1}}, 1});
}

TEST_CASE("odd-cycle identity: max of the singleton sum over LRANK(C_{2k+1}) is k") {
  for (int k = 2; k <= 4; ++k) {
    int n = 2 * k + 1;
    std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
    CHECK(lrank_max(cycle_graph(n), ones) == k);
    if (n <= 7) CHECK(lrank_max(lrank_hrep(cycle_graph(n)), ones) == k);
  }
}

TEST_CASE("STAB facets of small graphs") {
  auto c5 = stab_facets(cycle_graph(5));
  int nontrivial = 0;
  for (const Facet& f : c5) {
    if (f.trivial) continue;
    ++nontrivial;
    CHECK(f.c == 2);
    for (const Integer& w : f.w) CHECK(w == 1);
  }
  CHECK(nontrivial == 1);
  CHECK(c5.size() == 11);  // 5 nonnegativity, 5 edges, 1 rank

  auto k3 = stab_facets(complete_graph(3));
  CHECK(k3.size() == 4);
  for (const Facet& f : k3) CHECK(f.trivial);

  auto sq = stab_facets(empty_graph(2));
  CHECK(sq.size() == 4);
  CHECK_THROWS_AS(stab_facets(empty_graph(9)), CapacityError);
}

TEST_CASE("facets are valid and tight on n affinely independent indicators") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 6;
    Graph g = random_graph(n, 0.5, rng);
    auto pts = all_independent_including_empty(g);
    for (const Facet& f : stab_facets(g)) {
      std::vector<std::vector<Rational>> tight;
      for (VertexMask p : pts) {
        Integer lhs = 0;
        for (int i = 0; i < n; ++i)
          if ((p >> i) & 1) lhs += f.w[i];
        CHECK(lhs <= f.c);
        if (lhs == f.c) {
          std::vector<Rational> row{Rational(1)};
          for (int i = 0; i < n; ++i) row.emplace_back((p >> i) & 1);
          tight.push_back(row);
        }
      }
      CHECK(rank_of(tight) == n);
    }
  }
}

TEST_CASE("STAB is contained in LRANK: indicator extensions satisfy every row") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : generate_nonisomorphic(n)) {
      HPolytope poly = lrank_hrep(g);
      for (VertexMask w : all_independent_including_empty(g)) {
        std::vector<int> x(static_cast<std::size_t>(poly.num_vars()));
        for (int k = 0; k < poly.num_vars(); ++k) x[k] = (poly.is_graph.sets[k] & ~w) == 0 ? 1 : 0;
        for (const SparseInequality& row : poly.rows) {
          int lhs = 0;
          for (auto [v, c] : row.coeffs) lhs += c * x[v];
          CHECK(lhs <= row.rhs);
        }
      }
    }
  }
}

TEST_CASE("lazy and explicit LRANK maxima agree") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> weight(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 5;
    Graph g = random_graph(n, 0.4, rng);
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.emplace_back(weight(rng));
    CHECK(lrank_max(g, w) == lrank_max(lrank_hrep(g), w));
  }
}

TEST_CASE("LRANK is contained in TH") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> weight(0, 5);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + trial % 4;
    Graph g = random_graph(n, 0.5, rng);
    HPolytope poly = lrank_hrep(g);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Rational> w;
      for (int i = 0; i < n; ++i) w.emplace_back(weight(rng), 1 + rep % 3);
      auto t = theta(g, WeightVector(w));
      CHECK(to_double(lrank_max(poly, w)) <= t.upper + t.gap + 1e-9);
    }
  }
}

TEST_CASE("LRANK equals STAB for odd cycles") {
  for (int n : {5, 7}) {
    auto rep = lrank_equals_stab(cycle_graph(n));
    CHECK(rep.equal);
    CHECK(rep.checks.size() == 1);
  }
  auto perfect = lrank_equals_stab(path_graph(4));
  CHECK(perfect.equal);
  CHECK(perfect.checks.empty());
}
