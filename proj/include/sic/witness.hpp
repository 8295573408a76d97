#pragma once

#include "sic/graph.hpp"
#include "sic/projectors.hpp"
#include "sic/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sic {

struct PRVerification {
  bool ok = false;
  std::vector<std::string> violations;
};

inline constexpr double kFloatProjectorTolerance = 1e-10;

/// Checks Pi^dagger = Pi, Pi^2 = Pi, tr Pi = declared rank, and Pi_i Pi_j = 0 on
/// every edge. Exact in exact mode; float sets are checked entrywise against
/// `tolerance`. Throws ArgumentError when |p| differs from the vertex count.
PRVerification verify_pr(const ProjectorSet& p, const Graph& g, double tolerance = kFloatProjectorTolerance);

/// The 30 rank-2 projectors on R^8 built from paired rays of the 40-ray set.
/// Throws DataCorruptionError unless their sum is exactly (15/2) I.
ProjectorSet build_toh_pr();

/// Rank-one projectors onto the 13 Yu-Oh rays in R^3.
ProjectorSet yu_oh_projectors();

struct WitnessReport {
  WeightVector weights;
  Rational alpha;
  /// Smallest eigenvalue of sum_k w_k Pi_k - alpha I.
  double min_eigenvalue = 0;
  /// Set when every eigenvalue was recovered exactly.
  std::optional<Rational> exact_min_eigenvalue;
  /// Bound on |computed - true| for the float path; 0 when exact.
  double error_bound = 0;
  bool witnessed = false;
};

/// Exact eigenvalues when the operator is rational, d <= 8, and its scaled
/// characteristic polynomial splits over the integers; otherwise a float
/// eigensolver with a Gershgorin bound on the rotated matrix.
WitnessReport witness_min_eig(const ProjectorSet& p, const WeightVector& w, const Rational& alpha);

}  // namespace sic
