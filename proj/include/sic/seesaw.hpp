#pragma once

#include "sic/graph.hpp"
#include "sic/projectors.hpp"
#include "sic/witness.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace sic {

/// Hermitian n x n Gram matrix X = Y^dagger Y.
using GramMatrix = Eigen::MatrixXcd;

struct Projection {
  GramMatrix matrix;
  /// Squared Frobenius distance to the input, evaluated from the closed form.
  double residual = 0;
};

/// Nearest psd matrix of rank <= d: keeps the d largest nonnegative eigenvalues.
/// Throws NumericalError if the eigendecomposition fails.
Projection project_rank_psd(const GramMatrix& x, int d);

/// Nearest matrix with unit diagonal and zeros on the edges of g.
Projection project_affine(const GramMatrix& x, const Graph& g);

struct PRSearchConfig {
  int d = 1;
  int restarts = 100;
  double stop_ratio = 1e-5;
  int max_iterations = 20000;
  double found_threshold = 1e-7;
  std::uint64_t seed = 1;
  int threads = 1;
  /// Stop launching restarts once one succeeds (lower restarts still complete,
  /// so the outcome does not depend on the thread count).
  bool stop_at_first_found = true;
  bool record_traces = false;
};

struct RestartRecord {
  int restart = 0;
  int iterations = 0;
  double final_delta = 0;
  /// sum over edges of |y_l^dagger y_k|^2 for the extracted unit vectors.
  double residual = 0;
  bool converged = false;
  bool monotone = true;
  bool found = false;
  std::vector<double> deltas;  // only with record_traces
};

enum class PRStatus { Found, NotFound };

struct PRSearchOutcome {
  PRStatus status = PRStatus::NotFound;
  double best_residual = 0;
  int found_restart = -1;
  std::vector<RestartRecord> restarts;
  /// On found: d x n matrix of unit columns and its Gram matrix.
  Eigen::MatrixXcd vectors;
  GramMatrix gram;
};

/// Alternating projections between the rank-d psd matrices and the affine
/// constraint set, from seeded random starts. Throws ArgumentError for an
/// invalid configuration.
PRSearchOutcome find_rank1_pr(const Graph& g, const PRSearchConfig& cfg);

struct RankRSearchOutcome {
  PRSearchOutcome search;
  /// On found: one rank-r_k projector per vertex of g, assembled from the
  /// clique of its blow-up copies.
  std::optional<ProjectorSet> projectors;
  /// verify_pr of the assembled projectors against g.
  PRVerification verification;
};

/// Rank-one search on blowup(g, r) in dimension d, assembled into rank-r
/// projectors on success.
RankRSearchOutcome find_rankr_pr(const Graph& g, const WeightVector& r, const PRSearchConfig& cfg);

/// CSV "restart,iteration,delta" rows for recorded traces.
void write_traces_csv(std::ostream& out, const PRSearchOutcome& outcome);

}  // namespace sic
