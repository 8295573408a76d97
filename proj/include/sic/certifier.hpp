#pragma once

#include "sic/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sic {

/// Working graph of the four-dimensional deduction rules. Vertices keep their
/// original indices; a merged vertex is represented by the smallest index of
/// its class and the others are marked dead. Limited to 64 vertices.
class CertState {
 public:
  explicit CertState(const Graph& g);

  int capacity() const { return n_; }
  bool alive(int v) const { return (alive_ >> v) & 1; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  std::uint64_t alive_mask() const { return alive_; }
  /// Original vertices merged into v.
  std::uint64_t merge_class(int v) const { return class_[v]; }
  bool loop() const { return loop_; }
  std::size_t edge_count() const;

  /// Adds u-v; u == v sets the loop flag.
  void add_edge(int u, int v);
  /// Merges v into u (the survivor is the smaller index); adjacent vertices
  /// set the loop flag.
  void merge(int u, int v);

  /// Clique of size 5 or more, or a loop.
  bool contradictory() const;
  std::string contradiction() const;

  /// Byte string identifying the state (alive set and adjacency).
  std::string key() const;

  std::vector<std::array<int, 4>> four_cliques() const;

 private:
  int n_ = 0;
  std::uint64_t alive_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> class_;
  bool loop_ = false;
};

struct RuleStep {
  int rule = 0;  // 1, 2 or 3 (a rule-3 branch choice); 0 for a requested merge
  int x = 0;
  int y = 0;  // rule 1: new neighbor of x; rule 2: vertex merged into x; rule 3: endpoint joined to x
  std::array<int, 4> clique{};
  std::string describe() const;
};

/// Applies rules 2 then 1 until neither fires or the state is contradictory.
/// Returns the applied steps.
std::vector<RuleStep> apply_rules_to_fixpoint(CertState& s);

/// Successor states: none at a contradiction or a fixpoint without an open
/// rule-3 instance, one after deterministic progress, two at a rule-3 branch.
std::vector<CertState> successors(const CertState& s);

struct CertifierConfig {
  long max_leaves = 1000000;
  long max_steps = 50000000;
  bool record_traces = false;
};

struct BranchTrace {
  std::vector<RuleStep> steps;
  std::string contradiction;
};

struct CertVerdict {
  bool certified = false;
  long leaves = 0;
  long branchings = 0;
  long memo_hits = 0;
  long steps = 0;
  std::string diagnostic;
  std::vector<BranchTrace> traces;  // with record_traces
};

/// Depth-first search over rule-3 choices. Certified only if every branch
/// reaches a clique of size 5 or a loop; caps yield an inconclusive verdict.
/// `merges` are applied first (original vertex indices).
CertVerdict certify_no_rank1_4d(const Graph& g, const std::vector<std::pair<int, int>>& merges = {},
                                const CertifierConfig& cfg = {});

struct Case2Entry {
  std::pair<int, int> pair;  // 1-indexed labels of the Toh graph
  CertVerdict verdict;
};

/// The six vertex pairs of the Toh graph, each merged and certified.
std::vector<Case2Entry> gtoh_case2_report(const CertifierConfig& cfg = {});
const std::vector<std::pair<int, int>>& gtoh_case2_pairs();

}  // namespace sic
