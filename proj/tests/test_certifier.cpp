#include "doctest.h"

#include "sic/builtin_graphs.hpp"
#include "sic/certifier.hpp"
#include "sic/errors.hpp"
#include "sic/graph_algorithms.hpp"
#include "sic/seesaw.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>

using namespace sic;

namespace {

// Peres' 24 rays in dimension 4.
std::vector<std::array<int, 4>> peres_rays() {
  std::vector<std::array<int, 4>> rays;
  for (int i = 0; i < 4; ++i) {
    std::array<int, 4> r{};
    r[i] = 1;
    rays.push_back(r);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int s : {1, -1}) {
        std::array<int, 4> r{};
        r[i] = 1;
        r[j] = s;
        rays.push_back(r);
      }
  for (int m = 0; m < 8; ++m) rays.push_back({1, m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1});
  return rays;
}

Graph orthogonality_graph(const std::vector<std::array<int, 4>>& rays) {
  Graph g(static_cast<int>(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      int dot = 0;
      for (int k = 0; k < 4; ++k) dot += rays[i][k] * rays[j][k];
      if (dot == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("certifier trivial verdicts") {
  auto k5 = certify_no_rank1_4d(complete_graph(5));
  CHECK(k5.certified);
  CHECK(k5.leaves == 1);
  CHECK(k5.branchings == 0);

  auto c5 = certify_no_rank1_4d(cycle_graph(5));
  CHECK_FALSE(c5.certified);
  CHECK(c5.diagnostic.find("fixpoint") != std::string::npos);

  CHECK_FALSE(certify_no_rank1_4d(complete_graph(4)).certified);
  CHECK_FALSE(certify_no_rank1_4d(Graph(0)).certified);
}

TEST_CASE("rule 2 merges the fourth clique vertex") {
  // clique 0..3, vertex 4 adjacent to 0,1,2
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
  CertState s(g);
  auto steps = apply_rules_to_fixpoint(s);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].rule == 2);
  CHECK_FALSE(s.alive(4));
  CHECK(s.merge_class(3) == ((1u << 3) | (1u << 4)));
  CHECK_FALSE(s.loop());
  CHECK_FALSE(s.contradictory());
}

TEST_CASE("rule 1 joins complementary neighbors") {
  // clique 0..3, x=4 adjacent to 0,1 and y=5 adjacent to 2,3
  Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {5, 2}, {5, 3}});
  CertState s(g);
  auto steps = apply_rules_to_fixpoint(s);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].rule == 1);
  CHECK(s.adjacent(4, 5));
  CHECK(s.edge_count() == g.size() + 1);
}

TEST_CASE("rule 3 branches into two successors") {
  // clique 0..3, x=4 adjacent to 0,1; y=5 adjacent to 4 and 3
  Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 5}, {5, 3}});
  CertState s(g);
  CHECK(apply_rules_to_fixpoint(s).empty());
  auto next = successors(s);
  REQUIRE(next.size() == 2);
  CHECK(next[0].adjacent(5, 2));
  CHECK(next[1].adjacent(4, 2));
  // no 4-clique: fixpoint with no successors
  CHECK(successors(CertState(cycle_graph(6))).empty());
}

TEST_CASE("merging adjacent vertices sets the loop flag") {
  CertState s(complete_graph(3));
  s.merge(0, 1);
  CHECK(s.loop());
  CHECK(s.contradictory());
  CHECK(s.contradiction() == "self-loop");
  auto v = certify_no_rank1_4d(cycle_graph(5), {{0, 1}});
  CHECK(v.certified);
}

TEST_CASE("merge classes partition the vertex set") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(9, 0.4, rng);
    CertState s(g);
    std::uniform_int_distribution<int> pick(0, 8);
    for (int k = 0; k < 4; ++k) {
      int a = pick(rng), b = pick(rng);
      if (s.alive(a) && s.alive(b)) s.merge(a, b);
    }
    apply_rules_to_fixpoint(s);
    std::uint64_t all = 0;
    int total = 0;
    for (int v = 0; v < 9; ++v) {
      if (!s.alive(v)) {
        CHECK(s.merge_class(v) == 0);
        continue;
      }
      CHECK(((s.merge_class(v) >> v) & 1) == 1);
      CHECK((all & s.merge_class(v)) == 0);
      all |= s.merge_class(v);
      total += std::popcount(s.merge_class(v));
    }
    CHECK(all == 0x1ff);
    CHECK(total == 9);
  }
}

TEST_CASE("deterministic rules make monotone progress") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    CertState s(random_graph(10, 0.55, rng));
    for (int round = 0; round < 50; ++round) {
      auto next = successors(s);
      if (next.size() != 1) break;
      int before_v = std::popcount(s.alive_mask()), after_v = std::popcount(next[0].alive_mask());
      bool progress = after_v < before_v || next[0].edge_count() > s.edge_count() || next[0].loop();
      CHECK(progress);
      bool had_loop = s.loop();
      s = next[0];
      if (had_loop) CHECK(s.loop());
    }
  }
}

TEST_CASE("case 2 merges of the Toh graph are certified") {
  auto report = gtoh_case2_report();
  REQUIRE(report.size() == 6);
  for (const auto& e : report) {
    INFO("pair " << e.pair.first << "," << e.pair.second);
    CHECK(e.verdict.certified);
    // a binary search tree: every branching adds exactly one leaf
    CHECK(e.verdict.leaves == e.verdict.branchings + 1);
  }
  CHECK(report[0].pair == std::pair{5, 21});
  CHECK(report[3].pair == std::pair{3, 10});
  CHECK(report[5].pair == std::pair{4, 22});
  // without a merge the rules stall
  CHECK_FALSE(certify_no_rank1_4d(g_toh()).certified);
}

TEST_CASE("traces account for every leaf") {
  CertifierConfig cfg;
  cfg.record_traces = true;
  auto v = certify_no_rank1_4d(g_toh(), {{13, 22}}, cfg);
  REQUIRE(v.certified);
  REQUIRE(static_cast<long>(v.traces.size()) == v.leaves);
  // each leaf sits below one rule-3 choice per branching on its path; 2^-depth sums to one
  double mass = 0;
  for (const auto& t : v.traces) {
    CHECK_FALSE(t.contradiction.empty());
    REQUIRE_FALSE(t.steps.empty());
    CHECK(t.steps.front().rule == 0);
    long depth = std::count_if(t.steps.begin(), t.steps.end(), [](const RuleStep& s) { return s.rule == 3; });
    mass += std::ldexp(1.0, -static_cast<int>(depth));
  }
  CHECK(mass == doctest::Approx(1.0));
}

TEST_CASE("caps give inconclusive, never certified") {
  CertifierConfig cfg;
  cfg.max_leaves = 2;
  auto v = certify_no_rank1_4d(g_toh(), {{13, 22}}, cfg);
  CHECK_FALSE(v.certified);
  CHECK(v.diagnostic.find("cap") != std::string::npos);
  CHECK_THROWS_AS(certify_no_rank1_4d(cycle_graph(5), {{2, 2}}), ArgumentError);
  CHECK_THROWS_AS(certify_no_rank1_4d(Graph(65)), CapacityError);
}

TEST_CASE("graphs with a 4-dimensional representation are never certified") {
  auto rays = peres_rays();
  Graph full = orthogonality_graph(rays);
  CHECK(full.size() == 108);  // each ray is orthogonal to nine others
  CHECK_FALSE(certify_no_rank1_4d(full).certified);
  std::mt19937_64 rng(11);
  std::bernoulli_distribution keep(0.6), drop(0.15);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> subset;
    for (int i = 0; i < 24; ++i)
      if (keep(rng)) subset.push_back(i);
    Graph g = induced_subgraph(full, subset);
    for (const auto& e : g.edges())
      if (drop(rng)) g.remove_edge(e.u, e.v);
    CHECK_FALSE(certify_no_rank1_4d(g).certified);
  }
}

TEST_CASE("certified merges also defeat the numerical search") {
  PRSearchConfig cfg;
  cfg.d = 4;
  cfg.restarts = 8;
  cfg.seed = 17;
  for (auto [a, b] : gtoh_case2_pairs()) {
    Graph merged = merge_vertices(g_toh(), a - 1, b - 1);
    INFO("pair " << a << "," << b);
    CHECK(find_rank1_pr(merged, cfg).status == PRStatus::NotFound);
  }
  // random instances the certifier refutes
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 10; ++trial) {
    Graph g = random_graph(9, 0.6, rng);
    if (clique_number(g) >= 5 || !certify_no_rank1_4d(g).certified) continue;
    ++checked;
    cfg.restarts = 10;
    CHECK(find_rank1_pr(g, cfg).status == PRStatus::NotFound);
  }
  MESSAGE("random certified instances without a 5-clique: " << checked);
}
