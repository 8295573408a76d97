#include "doctest.h"

#include "sic/builtin_graphs.hpp"
#include "sic/enumerate.hpp"
#include "sic/errors.hpp"
#include "sic/graph.hpp"
#include "sic/graph6.hpp"
#include "sic/graph_algorithms.hpp"

#include <random>
#include <set>
#include <sstream>

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

// Brute force over all subsets.
Rational brute_alpha(const Graph& g, const WeightVector& w) {
  const int n = g.order();
  Rational best = 0;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    if (!is_independent(g, s)) continue;
    Rational total = 0;
    for (int v : mask_to_vertices(s)) total += w[v];
    if (total > best) best = total;
  }
  return best;
}

}  // namespace

TEST_CASE("graph6 decodes known records") {
  Graph empty5 = parse_graph6("D??");
  CHECK(empty5.order() == 5);
  CHECK(empty5.size() == 0);

  Graph c5 = parse_graph6("Dhc");
  CHECK(c5.order() == 5);
  std::vector<Edge> expected{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(c5.edges() == expected);

  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));

  CHECK(parse_graph6(">>graph6<<Dhc") == c5);
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
}

TEST_CASE("graph6 errors carry byte offsets") {
  try {
    parse_graph6("D\x01" "c");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_graph6("Dh"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Dhcc"), ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round trip on random graphs including long headers") {
  std::mt19937_64 rng(11);
  for (int n : {0, 1, 2, 7, 13, 62, 63, 70}) {
    Graph g = random_graph(n, 0.4, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 reader counts malformed records without stopping") {
  std::istringstream in("Dhc\n\nD\x01c\nA_\n");
  Graph6Reader reader(in);
  std::string rec;
  Graph g;
  std::vector<std::size_t> bad_lines;
  reader.on_error([&](std::size_t line, const std::string&) { bad_lines.push_back(line); });
  int seen = 0;
  while (reader.next(rec, g)) ++seen;
  CHECK(seen == 2);
  CHECK(reader.records_read() == 2);
  CHECK(reader.malformed() == 1);
  CHECK(bad_lines == std::vector<std::size_t>{3});
}

TEST_CASE("independent sets of C5") {
  Graph c5 = cycle_graph(5);
  auto all = independent_sets(c5, IndependentSetFamily::Mode::AllNonempty);
  CHECK(all.sets.size() == 10);
  auto maximal = independent_sets(c5, IndependentSetFamily::Mode::Maximal);
  CHECK(maximal.sets.size() == 5);
  for (VertexMask s : maximal.sets) CHECK(popcount(s) == 2);
  CHECK(alpha(c5) == 2);

  std::vector<int> w{2, 1, 1, 1, 1};
  CHECK(alpha_weighted(c5, WeightVector::from_ints(w)).value == 3);

  auto cliques = max_cliques(c5);
  CHECK(cliques.size() == 5);
  CHECK(clique_number(c5) == 2);
}

TEST_CASE("alpha_weighted agrees with brute force") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> weight(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 10;
    Graph g = random_graph(n, 0.45, rng);
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.emplace_back(weight(rng), 1 + trial % 3);
    WeightVector wv(w);
    auto res = alpha_weighted(g, wv);
    CHECK(res.value == brute_alpha(g, wv));
    CHECK(is_independent(g, res.set));
  }
}

TEST_CASE("maximal independent sets are maximal cliques of the complement") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(3 + trial % 8, 0.5, rng);
    auto mis = independent_sets(g, IndependentSetFamily::Mode::Maximal).sets;
    auto cl = max_cliques(complement(g));
    CHECK(mis == cl);
  }
}

TEST_CASE("blowup of C5 with ranks 2,1,1,1,1") {
  std::vector<int> r{2, 1, 1, 1, 1};
  Graph b = blowup(cycle_graph(5), r);
  CHECK(b.order() == 6);
  CHECK(b.adjacent(0, 1));  // the clique replacing vertex 0

  std::vector<int> two(5, 2);
  Graph b2 = blowup(cycle_graph(5), two);
  CHECK(b2.order() == 10);
  CHECK(b2.size() == 25);
}

TEST_CASE("blowup with unit ranks is the identity") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(6, 0.5, rng);
    std::vector<int> ones(6, 1);
    CHECK(blowup(g, ones) == g);
  }
}

TEST_CASE("blowup edge count formula") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> rank(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(6, 0.5, rng);
    std::vector<int> r(6);
    for (int& x : r) x = rank(rng);
    std::size_t expected = 0;
    for (int x : r) expected += static_cast<std::size_t>(x * (x - 1) / 2);
    for (Edge e : g.edges()) expected += static_cast<std::size_t>(r[e.u] * r[e.v]);
    CHECK(blowup(g, r).size() == expected);
  }
}

TEST_CASE("graph operations") {
  Graph c5 = cycle_graph(5);
  CHECK(is_connected(c5));
  CHECK(is_connected(complement(c5)));
  Graph two_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
  CHECK_FALSE(is_connected(complement(complete_graph(4))));
  CHECK(remove_edge(c5, Edge(0, 1)).size() == 4);
  CHECK_THROWS_AS(remove_edge(c5, Edge(0, 2)), ArgumentError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ArgumentError);

  Graph merged = merge_vertices(c5, 0, 2);
  CHECK(merged.order() == 4);
  // neighbors of 0 were {1,4}, of 2 were {1,3}; vertex 3,4 renumber to 2,3
  CHECK(merged.adjacent(0, 1));
  CHECK(merged.adjacent(0, 2));
  CHECK(merged.adjacent(0, 3));
}

TEST_CASE("builtin graphs") {
  const Graph& toh = g_toh();
  CHECK(toh.order() == 30);
  CHECK(toh.size() == 90);
  CHECK(g_toh_cliques().size() == 15);
  CHECK(alpha(toh) == 7);

  const Graph& yo = g_yo();
  CHECK(yo.order() == 13);
  CHECK(yo.size() == 24);
  CHECK(alpha(yo) == 5);
}

TEST_CASE("nonisomorphic enumeration counts") {
  const std::size_t counts[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(generate_nonisomorphic(n).size() == counts[n]);
  CHECK_THROWS_AS(generate_nonisomorphic(9), CapacityError);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 9;
    Graph g = random_graph(n, 0.4, rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (Edge e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}
