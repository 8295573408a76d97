#pragma once

#include "sic/graph.hpp"
#include "sic/rational.hpp"
#include "sic/seesaw.hpp"
#include "sic/theta.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sic {

inline constexpr int kMaxPipelineRank = 3;

struct RankConditions {
  int rank = 1;
  std::optional<bool> c4;  // nullopt: not evaluated (an earlier stage failed)
  std::optional<bool> c5;
  bool theta_ambiguous = false;  // C5 kept because the ceiling of r*theta_bar was not certified
};

struct ConditionReport {
  std::string graph6;
  bool c1 = false;  // G connected
  bool c2 = false;  // complement connected
  std::optional<bool> c3;
  std::vector<RankConditions> ranks;
  std::optional<Rational> chi_f;
  // min/max of chi_f(G - e) over edges; only when every deletion was solved
  std::optional<Rational> chi_f_deleted_min, chi_f_deleted_max;
  std::optional<ThetaResult> theta_bar;

  /// Passed C1 through C5 for rank r.
  bool survives(int r) const;
  const RankConditions* at_rank(int r) const;
};

struct ConditionOptions {
  /// Skip later conditions once a graph fails a stage for every rank.
  bool staged = true;
  ThetaOptions theta;
};

/// Conditions 1-5 for uniform ranks (subset of 1..3). chi_f and theta_bar
/// are computed at unit weight and scaled by r. C3 stops at the first edge
/// with chi_f(G - e) = chi_f(G); C4 then fails for every rank.
ConditionReport check_conditions(const Graph& g, const std::vector<int>& ranks, const ConditionOptions& opts = {});

struct PipelineCounts {
  std::vector<int> ranks;
  long total = 0;
  long after_c12 = 0;
  long after_c123 = 0;
  std::vector<long> after_c1234;  // parallel to ranks
  std::vector<long> after_c12345;
  long malformed = 0;
  long skipped_edge_cap = 0;
  long theta_ambiguous = 0;

  /// Throws std::logic_error when a stage count exceeds its predecessor.
  void assert_monotone() const;
};

struct Survivor {
  long index = 0;  // position among well-formed records
  std::string graph6;
  std::vector<int> ranks;
};

struct PipelineOptions {
  std::vector<int> ranks{1, 2, 3};
  std::optional<int> max_edges;
  int threads = 1;
  std::size_t batch = 4096;
  ConditionOptions conditions;
};

struct PipelineResult {
  PipelineCounts counts;
  std::vector<Survivor> survivors;
};

/// Filters a graph6 stream. Survivors (C1-C5 for at least one rank) are kept
/// in input order and, when `survivor_out` is set, written there as
/// "graph6 r1,r2" lines as soon as their batch completes.
PipelineResult run_pipeline(std::istream& in, const PipelineOptions& opts, std::ostream* survivor_out = nullptr);

struct DpiVerdict {
  int rank = 1;
  Rational chi_f;
  int dimension = 0;  // ceil(r chi_f) - 1
  bool sic_possible = false;
  PRSearchOutcome search;
};

/// Looks for a rank-one PR of the blowup G^(r,...,r) in dimension ceil(r chi_f(G)) - 1.
/// `cfg.d` is overridden.
DpiVerdict dpi_vs_chif_verdict(const Graph& g, int r, const PRSearchConfig& cfg);

}  // namespace sic
