#pragma once

#include "sic/graph.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sic {

/// The 30-vertex Toh graph: all pairs inside the 15 bundled four-cliques.
const Graph& g_toh();
/// The bundled four-cliques of g_toh, 0-indexed.
const std::vector<std::array<int, 4>>& g_toh_cliques();

/// Orthogonality graph of the 13 Yu-Oh rays (13 vertices, 24 edges).
const Graph& g_yo();
const std::vector<std::array<int, 3>>& yu_oh_rays();

/// {"g_toh", "g_yo"}.
std::map<std::string, Graph> builtin_graphs();

}  // namespace sic
