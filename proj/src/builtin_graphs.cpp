#include "sic/builtin_graphs.hpp"

#include "sic/datasets.hpp"
#include "sic/errors.hpp"

namespace sic {

namespace {

std::vector<std::array<int, 4>> load_toh_cliques() {
  std::vector<std::array<int, 4>> out;
  for (const auto& row : datasets::parse_int_table(datasets::toh_cliques())) {
    if (row.size() != 4) throw DataCorruptionError("toh_cliques: every row must list four vertices");
    std::array<int, 4> c{};
    for (int i = 0; i < 4; ++i) {
      if (row[i] < 1 || row[i] > 30) throw DataCorruptionError("toh_cliques: vertex label out of range 1..30");
      c[i] = row[i] - 1;
    }
    out.push_back(c);
  }
  if (out.size() != 15) throw DataCorruptionError("toh_cliques: expected 15 cliques");
  return out;
}

Graph build_toh() {
  Graph g(30);
  for (const auto& c : g_toh_cliques()) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) g.add_edge(c[i], c[j]);
    }
  }
  return g;
}

std::vector<std::array<int, 3>> load_yu_oh() {
  std::vector<std::array<int, 3>> out;
  for (const auto& row : datasets::parse_int_table(datasets::yu_oh_rays())) {
    if (row.size() != 3) throw DataCorruptionError("yu_oh_rays: every row must have three coordinates");
    out.push_back({row[0], row[1], row[2]});
  }
  if (out.size() != 13) throw DataCorruptionError("yu_oh_rays: expected 13 rays");
  return out;
}

Graph build_yo() {
  const auto& rays = yu_oh_rays();
  Graph g(static_cast<int>(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      int dot = rays[i][0] * rays[j][0] + rays[i][1] * rays[j][1] + rays[i][2] * rays[j][2];
      if (dot == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (g.order() != 13 || g.size() != 24) {
    throw DataCorruptionError("Yu-Oh orthogonality graph must have 13 vertices and 24 edges, got " +
                              std::to_string(g.order()) + " and " + std::to_string(g.size()));
  }
  return g;
}

}  // namespace

const std::vector<std::array<int, 4>>& g_toh_cliques() {
  static const auto cliques = load_toh_cliques();
  return cliques;
}

const Graph& g_toh() {
  static const Graph g = build_toh();
  return g;
}

const std::vector<std::array<int, 3>>& yu_oh_rays() {
  static const auto rays = load_yu_oh();
  return rays;
}

const Graph& g_yo() {
  static const Graph g = build_yo();
  return g;
}

std::map<std::string, Graph> builtin_graphs() { return {{"g_toh", g_toh()}, {"g_yo", g_yo()}}; }

}  // namespace sic
