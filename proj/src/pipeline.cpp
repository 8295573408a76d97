#include "sic/pipeline.hpp"

#include "sic/chromatic.hpp"
#include "sic/errors.hpp"
#include "sic/graph6.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace sic {

bool ConditionReport::survives(int r) const {
  const RankConditions* rc = at_rank(r);
  return c1 && c2 && c3.value_or(false) && rc && rc->c4.value_or(false) && rc->c5.value_or(false);
}

const RankConditions* ConditionReport::at_rank(int r) const {
  for (const auto& rc : ranks)
    if (rc.rank == r) return &rc;
  return nullptr;
}

namespace {

void check_ranks(const std::vector<int>& ranks) {
  if (ranks.empty()) throw ArgumentError("at least one rank is required");
  for (int r : ranks)
    if (r < 1 || r > kMaxPipelineRank)
      throw ArgumentError("uniform rank must be in 1.." + std::to_string(kMaxPipelineRank) + ", got " +
                          std::to_string(r));
}

// C5 for rank r: ceil(r * theta_bar) < r * chi_f. Sets `ambiguous` when the
// two possible ceilings of the certified interval disagree on the verdict.
bool condition5(const ThetaResult& t, int r, const Rational& chi, bool& ambiguous) {
  ambiguous = false;
  Rational rchi = chi * r;
  if (!t.certified) {
    ambiguous = true;
    return true;
  }
  ThetaResult scaled = t;
  scaled.value *= r;
  scaled.lower *= r;
  scaled.upper *= r;
  if (auto c = ceil_certified(scaled)) return Rational(*c) < rchi;
  bool low = Rational(static_cast<long>(std::ceil(scaled.lower))) < rchi;
  bool high = Rational(static_cast<long>(std::ceil(scaled.upper))) < rchi;
  if (low == high) return low;
  ambiguous = true;
  return true;
}

}  // namespace

ConditionReport check_conditions(const Graph& g, const std::vector<int>& ranks, const ConditionOptions& opts) {
  check_ranks(ranks);
  ConditionReport rep;
  rep.graph6 = write_graph6(g);
  rep.c1 = is_connected(g);
  rep.c2 = is_connected(complement(g));
  for (int r : ranks) rep.ranks.push_back({r, std::nullopt, std::nullopt, false});
  if (opts.staged && !(rep.c1 && rep.c2)) return rep;

  const WeightVector unit = WeightVector::unit(g.order());
  const Rational chi = chi_f_value(g, unit);
  rep.chi_f = chi;
  std::vector<Rational> deleted;
  bool c3 = true;
  for (const Edge& e : g.edges()) {
    deleted.push_back(chi_f_value(remove_edge(g, e), unit));
    if (deleted.back() == chi) {
      c3 = false;
      break;
    }
  }
  rep.c3 = c3;
  if (c3 && !deleted.empty()) {
    auto [lo, hi] = std::minmax_element(deleted.begin(), deleted.end());
    rep.chi_f_deleted_min = *lo;
    rep.chi_f_deleted_max = *hi;
  }

  bool any_c4 = false;
  for (auto& rc : rep.ranks) {
    if (!c3) {
      // equal values give equal ceilings
      rc.c4 = false;
      continue;
    }
    Integer top = ceil(chi * rc.rank);
    rc.c4 = std::all_of(deleted.begin(), deleted.end(), [&](const Rational& x) { return ceil(x * rc.rank) != top; });
    any_c4 = any_c4 || *rc.c4;
  }
  if (opts.staged && !any_c4) return rep;

  rep.theta_bar = theta_bar(g, unit, opts.theta);
  for (auto& rc : rep.ranks) {
    if (opts.staged && !rc.c4.value_or(false)) continue;
    rc.c5 = condition5(*rep.theta_bar, rc.rank, chi, rc.theta_ambiguous);
  }
  return rep;
}

void PipelineCounts::assert_monotone() const {
  auto fail = [](const std::string& what) { throw std::logic_error("pipeline counts not monotone: " + what); };
  if (after_c12 > total) fail("C1&C2 > total");
  if (after_c123 > after_c12) fail("C1-C3 > C1&C2");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (after_c1234[i] > after_c123) fail("C1-C4 > C1-C3 at r=" + std::to_string(ranks[i]));
    if (after_c12345[i] > after_c1234[i]) fail("C1-C5 > C1-C4 at r=" + std::to_string(ranks[i]));
  }
}

PipelineResult run_pipeline(std::istream& in, const PipelineOptions& opts, std::ostream* survivor_out) {
  check_ranks(opts.ranks);
  if (opts.threads < 1) throw ArgumentError("threads must be positive");
  if (opts.max_edges && *opts.max_edges < 0) throw ArgumentError("max_edges must be nonnegative");

  PipelineResult result;
  PipelineCounts& counts = result.counts;
  counts.ranks = opts.ranks;
  counts.after_c1234.assign(opts.ranks.size(), 0);
  counts.after_c12345.assign(opts.ranks.size(), 0);

  Graph6Reader reader(in);
  std::vector<Graph> graphs;
  std::vector<std::string> records;
  std::vector<ConditionReport> reports;
  const std::size_t batch = std::max<std::size_t>(opts.batch, 1);
  long index = 0;

  auto process = [&]() {
    reports.assign(graphs.size(), {});
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&]() {
      for (std::size_t i; !failed && (i = next++) < graphs.size();) {
        try {
          reports[i] = check_conditions(graphs[i], opts.ranks, opts.conditions);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    };
    int workers = static_cast<int>(std::min<std::size_t>(opts.threads, graphs.size()));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    for (std::size_t i = 0; i < graphs.size(); ++i, ++index) {
      const ConditionReport& rep = reports[i];
      ++counts.total;
      if (!(rep.c1 && rep.c2)) continue;
      ++counts.after_c12;
      if (!rep.c3.value_or(false)) continue;
      ++counts.after_c123;
      Survivor s{index, records[i], {}};
      for (std::size_t k = 0; k < opts.ranks.size(); ++k) {
        const RankConditions* rc = rep.at_rank(opts.ranks[k]);
        if (!rc->c4.value_or(false)) continue;
        ++counts.after_c1234[k];
        if (rc->theta_ambiguous) ++counts.theta_ambiguous;
        if (!rc->c5.value_or(false)) continue;
        ++counts.after_c12345[k];
        s.ranks.push_back(opts.ranks[k]);
      }
      if (s.ranks.empty()) continue;
      if (survivor_out) {
        *survivor_out << s.graph6 << ' ';
        for (std::size_t k = 0; k < s.ranks.size(); ++k) *survivor_out << (k ? "," : "") << s.ranks[k];
        *survivor_out << '\n';
      }
      result.survivors.push_back(std::move(s));
    }
    graphs.clear();
    records.clear();
  };

  std::string record;
  Graph g;
  while (reader.next(record, g)) {
    if (opts.max_edges && static_cast<long>(g.size()) > *opts.max_edges) {
      ++counts.skipped_edge_cap;
      continue;
    }
    graphs.push_back(std::move(g));
    records.push_back(record);
    if (graphs.size() >= batch) process();
  }
  if (in.bad()) throw std::runtime_error("read error on graph6 stream");
  if (!graphs.empty()) process();
  counts.malformed = static_cast<long>(reader.malformed());
  counts.assert_monotone();
  return result;
}

DpiVerdict dpi_vs_chif_verdict(const Graph& g, int r, const PRSearchConfig& cfg) {
  if (r < 1) throw ArgumentError("rank must be positive");
  DpiVerdict v;
  v.rank = r;
  v.chi_f = chi_f_value(g, WeightVector::unit(g.order()));
  Integer top = ceil(v.chi_f * r);
  v.dimension = static_cast<int>(top) - 1;
  if (v.dimension < 1) throw ArgumentError("ceil(r chi_f) - 1 is below one; no search dimension");
  std::vector<int> ranks(g.order(), r);
  PRSearchConfig c = cfg;
  c.d = v.dimension;
  v.search = find_rank1_pr(blowup(g, ranks), c);
  v.sic_possible = v.search.status == PRStatus::Found;
  return v;
}

}  // namespace sic
