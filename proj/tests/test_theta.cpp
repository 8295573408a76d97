#include "doctest.h"

#include "sic/builtin_graphs.hpp"
#include "sic/chromatic.hpp"
#include "sic/errors.hpp"
#include "sic/graph_algorithms.hpp"
#include "sic/graph6.hpp"
#include "sic/theta.hpp"

#include <cmath>
#include <numbers>
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

bool encloses(const ThetaResult& t, double v) { return t.lower <= v && v <= t.upper; }

// Lovasz's closed form for odd cycles.
double odd_cycle_theta(int n) {
  double c = std::cos(std::numbers::pi / n);
  return n * c / (1 + c);
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST_CASE("theta of odd cycles") {
  for (int n : {5, 7, 9, 11}) {
    auto t = theta(cycle_graph(n), WeightVector::unit(n));
    CHECK(t.certified);
    CHECK(t.gap <= 1e-7);
    CHECK(encloses(t, odd_cycle_theta(n)));
  }
  auto t5 = theta(cycle_graph(5), WeightVector::unit(5));
  CHECK(encloses(t5, std::sqrt(5.0)));
  CHECK(t5.gap <= 1e-6);
  auto tb = theta_bar(cycle_graph(5), WeightVector::unit(5));
  CHECK(encloses(tb, std::sqrt(5.0)));
}

TEST_CASE("theta of trivial graphs") {
  for (int m : {1, 3, 6}) {
    CHECK(encloses(theta(empty_graph(m), WeightVector::unit(m)), m));
    CHECK(encloses(theta(complete_graph(m), WeightVector::unit(m)), 1.0));
    CHECK(encloses(theta_bar(complete_graph(m), WeightVector::unit(m)), m));
  }
  auto zero = theta(cycle_graph(5), WeightVector::uniform(5, 0));
  CHECK(zero.upper == 0);
  CHECK(theta(Graph(0), WeightVector()).upper == 0);
}

TEST_CASE("theta of the Petersen graph is 4") {
  auto t = theta(petersen(), WeightVector::unit(10));
  CHECK(t.certified);
  CHECK(encloses(t, 4.0));
}

TEST_CASE("theta_bar of the Yu-Oh graph is at most 3") {
  auto t = theta_bar(g_yo(), WeightVector::unit(13));
  CHECK(t.certified);
  CHECK(t.lower <= 3 + 1e-6);
  CHECK(t.upper >= 3 - 1e-9);  // omega = 3
}

TEST_CASE("weighted theta on a vertex-weighted C5") {
  // C5 with weights 2,1,1,1,1 is the blow-up oracle's C5^r at r = (2,1,1,1,1).
  std::vector<int> r{2, 1, 1, 1, 1};
  auto direct = theta_bar(cycle_graph(5), WeightVector::from_ints(r));
  Graph b = blowup(cycle_graph(5), r);
  auto blown = theta_bar(b, WeightVector::unit(b.order()));
  CHECK(direct.lower <= blown.upper + 1e-9);
  CHECK(blown.lower <= direct.upper + 1e-9);
}

TEST_CASE("sandwich omega <= theta_bar <= chi_f on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 7;
    Graph g = random_graph(n, 0.5, rng);
    auto t = theta_bar(g, WeightVector::unit(n));
    CHECK(t.certified);
    double omega = clique_number(g);
    double chi = to_double(chi_f_value(g, WeightVector::unit(n)));
    CHECK(omega <= t.upper + 1e-12);
    CHECK(t.lower <= chi + 1e-12);
  }
}

TEST_CASE("scaling theta_bar(g, m*1) = m theta_bar(g, 1)") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + trial % 5;
    Graph g = random_graph(n, 0.5, rng);
    auto base = theta_bar(g, WeightVector::unit(n));
    double mid = 0.5 * (base.lower + base.upper);
    for (int m : {2, 3}) {
      auto s = theta_bar(g, WeightVector::uniform(n, m));
      CHECK(s.lower - m * base.gap <= m * mid);
      CHECK(m * mid <= s.upper + m * base.gap);
    }
  }
}

TEST_CASE("adding an edge never increases theta") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + trial % 5;
    Graph g = random_graph(n, 0.3, rng);
    auto non = complement(g).edges();
    if (non.empty()) continue;
    Graph h = add_edge(g, non[trial % non.size()]);
    CHECK(theta(h, WeightVector::unit(n)).lower <= theta(g, WeightVector::unit(n)).upper);
  }
}

TEST_CASE("ceil_certified") {
  ThetaResult t;
  t.certified = true;
  t.lower = 2.2360679;
  t.upper = 2.2360681;
  CHECK(ceil_certified(t) == 3L);
  t.lower = 2.9999999;
  t.upper = 3.0000001;
  CHECK_FALSE(ceil_certified(t).has_value());
  t.lower = 3.0000001;
  t.upper = 3.0000002;
  CHECK(ceil_certified(t) == 4L);
  t.certified = false;
  CHECK_THROWS_AS(ceil_certified(t), ArgumentError);
}

TEST_CASE("blowup with a singular Schur complement near the optimum still certifies") {
  // blowup of a 4-vertex graph; LLT and LDLT of the Schur complement both fail at mu ~ 1e-8
  Graph g = parse_graph6("IwC^FC[FG");
  auto t = theta_bar(g, WeightVector::unit(g.order()));
  CHECK(t.certified);
  CHECK(t.lower <= 5.0);
  CHECK(t.upper >= 5.0);
}
