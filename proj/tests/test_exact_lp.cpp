#include "doctest.h"

#include "sic/chromatic.hpp"
#include "sic/builtin_graphs.hpp"
#include "sic/errors.hpp"
#include "sic/exact_lp.hpp"

#include <random>

using namespace sic;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("small maximization") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {q(1), q(1)};
  lp.add({q(1), q(2)}, Relation::LessEqual, q(2));
  lp.add({q(2), q(1)}, Relation::LessEqual, q(2));
  auto sol = solve_lp_exact(lp);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.value == q(4, 3));
  CHECK(sol.primal == std::vector<Rational>{q(2, 3), q(2, 3)});
  CHECK(sol.dual == std::vector<Rational>{q(1, 3), q(1, 3)});
  CHECK(verify_certificate(lp, sol).empty());
}

TEST_CASE("minimization with >= and = rows needs phase one") {
  LinearProgram lp;
  lp.num_vars = 3;
  lp.sense = Sense::Minimize;
  lp.objective = {q(2), q(3), q(1)};
  lp.add({q(1), q(1), q(0)}, Relation::GreaterEqual, q(3));
  lp.add({q(0), q(1), q(1)}, Relation::GreaterEqual, q(2));
  lp.add({q(1), q(0), q(1)}, Relation::Equal, q(2));
  auto sol = solve_lp_exact(lp);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.value == q(8));
  CHECK(sol.primal == std::vector<Rational>{q(3, 2), q(3, 2), q(1, 2)});
  CHECK(verify_certificate(lp, sol).empty());
}

TEST_CASE("infeasible program yields a Farkas certificate") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {q(1), q(0)};
  lp.add({q(1), q(1)}, Relation::LessEqual, q(1));
  lp.add({q(1), q(1)}, Relation::GreaterEqual, q(3));
  auto sol = solve_lp_exact(lp);
  CHECK(sol.status == LPStatus::Infeasible);
  CHECK(verify_certificate(lp, sol).empty());
}

TEST_CASE("unbounded program yields a ray") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {q(1), q(1)};
  lp.add({q(1), q(-1)}, Relation::LessEqual, q(1));
  auto sol = solve_lp_exact(lp);
  CHECK(sol.status == LPStatus::Unbounded);
  CHECK(verify_certificate(lp, sol).empty());
}

TEST_CASE("verify_certificate rejects a tampered solution") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {q(1), q(1)};
  lp.add({q(1), q(2)}, Relation::LessEqual, q(2));
  lp.add({q(2), q(1)}, Relation::LessEqual, q(2));
  auto sol = solve_lp_exact(lp);
  sol.value = q(3, 2);
  CHECK_FALSE(verify_certificate(lp, sol).empty());
}

TEST_CASE("random programs: strong duality and certificates") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 5);
  int statuses[3] = {0, 0, 0};
  for (int trial = 0; trial < 150; ++trial) {
    LinearProgram lp;
    lp.num_vars = 2 + trial % 4;
    lp.sense = trial % 2 ? Sense::Minimize : Sense::Maximize;
    for (int j = 0; j < lp.num_vars; ++j) lp.objective.push_back(q(coef(rng)));
    int rows = 2 + trial % 5;
    for (int i = 0; i < rows; ++i) {
      std::vector<Rational> a;
      for (int j = 0; j < lp.num_vars; ++j) a.push_back(q(coef(rng)));
      Relation rel = static_cast<Relation>((trial + i) % 3);
      lp.add(a, rel, q(coef(rng)));
    }
    auto sol = solve_lp_exact(lp);
    statuses[static_cast<int>(sol.status)]++;
    CHECK(verify_certificate(lp, sol).empty());
  }
  CHECK(statuses[0] > 0);
  CHECK(statuses[1] > 0);
  CHECK(statuses[2] > 0);
}

TEST_CASE("fractional chromatic numbers") {
  CHECK(chi_f_value(cycle_graph(5), WeightVector::unit(5)) == q(5, 2));
  CHECK(chi_f_value(cycle_graph(7), WeightVector::unit(7)) == q(7, 3));
  CHECK(chi_f_value(complete_graph(4), WeightVector::unit(4)) == q(4));
  CHECK(chi_f_value(empty_graph(3), WeightVector::unit(3)) == q(1));

  auto toh = chi_f(g_toh(), WeightVector::unit(30));
  CHECK(toh.value == q(30, 7));
  CHECK(verify_chi_f(g_toh(), WeightVector::unit(30), toh).empty());
}

TEST_CASE("odd cycles: chi_f(C_{2k+1}) = 2 + 1/k") {
  for (int k = 1; k <= 6; ++k) {
    int n = 2 * k + 1;
    CHECK(chi_f_value(cycle_graph(n), WeightVector::unit(n)) == q(2) + q(1, k));
  }
}

TEST_CASE("chi_f with weights and certificates") {
  std::vector<int> r{2, 1, 1, 1, 1};
  auto res = chi_f(cycle_graph(5), WeightVector::from_ints(r));
  CHECK(verify_chi_f(cycle_graph(5), WeightVector::from_ints(r), res).empty());
  // blow-up oracle: chi_f(C5, r) = chi_f(C5^r, 1)
  Graph b = blowup(cycle_graph(5), r);
  CHECK(res.value == chi_f_value(b, WeightVector::unit(b.order())));
}

TEST_CASE("chi_f of edge deletions of C5") {
  auto m = chi_f_all_edge_deletions(cycle_graph(5), WeightVector::unit(5));
  CHECK(m.size() == 5);
  for (auto& [e, v] : m) CHECK(v == q(2));
}

TEST_CASE("chi_f capacity guard") {
  CHECK_THROWS_AS(chi_f(empty_graph(33), WeightVector::unit(33)), CapacityError);
}
