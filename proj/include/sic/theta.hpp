#pragma once

#include "sic/graph.hpp"

#include <optional>
#include <string>

namespace sic {

/// Lovasz number with a verified enclosure. `lower` comes from a primal point
/// repaired to exact feasibility, `upper` from a dual point whose slack was
/// re-checked; the true value lies in [lower, upper].
struct ThetaResult {
  double value = 0;
  double lower = 0;
  double upper = 0;
  double gap = 0;
  bool certified = false;
  int iterations = 0;
};

struct ThetaOptions {
  double target_gap = 1e-7;
  int max_iterations = 500;
};

/// theta(G, w) = max <sqrt(w) sqrt(w)^T, X>  s.t.  tr X = 1, X_ij = 0 on edges, X psd.
/// Throws ArgumentError for negative or wrong-length weights.
ThetaResult theta(const Graph& g, const WeightVector& w, const ThetaOptions& opts = {});
/// theta of the complement.
ThetaResult theta_bar(const Graph& g, const WeightVector& w, const ThetaOptions& opts = {});

/// Ceiling of the enclosed value, or nullopt when [lower, upper] straddles an
/// integer. Throws ArgumentError for an uncertified result.
std::optional<long> ceil_certified(const ThetaResult& t);

std::string describe(const ThetaResult& t);

}  // namespace sic
