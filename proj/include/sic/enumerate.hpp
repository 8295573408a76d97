#pragma once

#include "sic/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sic {

inline constexpr int kMaxGeneratedOrder = 8;

/// Upper-triangle adjacency bits in row-major order ("01" characters), minimized
/// over all vertex orders that list vertices by nonincreasing degree. Two graphs
/// are isomorphic iff their canonical forms agree.
std::string canonical_form(const Graph& g);

/// Calls `visit` once per isomorphism class of graphs on n vertices, in
/// increasing order of canonical form. Throws CapacityError for n > 8 (use an
/// external generator and graph6 input instead).
void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> generate_nonisomorphic(int n);

}  // namespace sic
