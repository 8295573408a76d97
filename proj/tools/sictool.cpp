// Command-line front end for the sic library.
#include "CLI11.hpp"
#include "json.hpp"

#include "sic/builtin_graphs.hpp"
#include "sic/certifier.hpp"
#include "sic/chromatic.hpp"
#include "sic/errors.hpp"
#include "sic/graph6.hpp"
#include "sic/graph_algorithms.hpp"
#include "sic/pipeline.hpp"
#include "sic/rank_polytope.hpp"
#include "sic/seesaw.hpp"
#include "sic/theta.hpp"
#include "sic/witness.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sic;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kIoError = 1, kCapacityError = 2, kArgumentError = 3, kNumericalError = 4 };

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::vector<std::string> inputs;
  std::vector<int> ranks;
  std::string weights;
  std::uint64_t seed = 1;
  int threads = 1;
  bool json = false;
  bool csv = false;
};

// Rows collected by a subcommand and printed in the selected format.
class Report {
 public:
  explicit Report(const Common& c) : c_(c) {}

  void add(json row) {
    if (c_.json) {
      rows_.push_back(std::move(row));
    } else if (c_.csv) {
      if (!header_) {
        bool first = true;
        for (auto& [k, v] : row.items()) {
          std::cout << (first ? "" : ",") << k;
          first = false;
        }
        std::cout << '\n';
        header_ = true;
      }
      bool first = true;
      for (auto& [k, v] : row.items()) {
        std::cout << (first ? "" : ",") << csv_field(v);
        first = false;
      }
      std::cout << '\n';
    } else {
      bool first = true;
      for (auto& [k, v] : row.items()) {
        std::cout << (first ? "" : " ") << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
      }
      std::cout << '\n';
    }
  }

  void finish(const json& summary = nullptr) {
    if (!c_.json) return;
    json out;
    if (!summary.is_null()) {
      out = summary;
      out["results"] = rows_;
    } else {
      out = rows_;
    }
    std::cout << out.dump(2) << '\n';
  }

 private:
  static std::string csv_field(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }

  const Common& c_;
  json rows_ = json::array();
  bool header_ = false;
};

// Calls visit for every well-formed record of the inputs (stdin when empty).
void for_each_graph(const std::vector<std::string>& inputs,
                    const std::function<void(const std::string&, const Graph&)>& visit) {
  auto drain = [&](std::istream& in, const std::string& name) {
    Graph6Reader reader(in);
    reader.on_error([&](std::size_t line, const std::string& what) {
      std::cerr << name << ":" << line << ": skipped malformed record: " << what << '\n';
    });
    std::string rec;
    Graph g;
    while (reader.next(rec, g)) visit(rec, g);
    if (in.bad()) throw IoError("read error on " + name);
  };
  if (inputs.empty()) {
    drain(std::cin, "<stdin>");
    return;
  }
  for (const auto& path : inputs) {
    if (path == "-") {
      drain(std::cin, "<stdin>");
      continue;
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    drain(in, path);
  }
}

WeightVector parse_weights(const std::string& text, int n) {
  std::vector<Rational> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
  if (static_cast<int>(w.size()) != n)
    throw ArgumentError("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
  return WeightVector(std::move(w));
}

// Weight vectors to evaluate: --weights when given, else one uniform vector per rank.
std::vector<std::pair<std::string, WeightVector>> weightings(const Common& c, int n) {
  if (!c.weights.empty()) return {{c.weights, parse_weights(c.weights, n)}};
  std::vector<std::pair<std::string, WeightVector>> out;
  for (int r : c.ranks) {
    if (r < 1) throw ArgumentError("ranks must be positive");
    out.push_back({std::to_string(r), WeightVector::uniform(n, Rational(r))});
  }
  return out;
}

json one_indexed(VertexMask m) {
  json a = json::array();
  for (int v : mask_to_vertices(m)) a.push_back(v + 1);
  return a;
}

json theta_json(const ThetaResult& t) {
  json j;
  j["value"] = t.value;
  j["lower"] = t.lower;
  j["upper"] = t.upper;
  j["gap"] = t.gap;
  j["certified"] = t.certified;
  j["iterations"] = t.iterations;
  return j;
}

std::pair<int, int> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ArgumentError("merge pair must look like a,b: " + text);
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ArgumentError("merge pair must look like a,b: " + text);
  }
}

json verdict_json(const CertVerdict& v, bool traces) {
  json j;
  j["verdict"] = v.certified ? "certified" : "inconclusive";
  j["leaves"] = v.leaves;
  j["branchings"] = v.branchings;
  j["memo_hits"] = v.memo_hits;
  j["steps"] = v.steps;
  j["diagnostic"] = v.diagnostic;
  if (traces) {
    json t = json::array();
    for (const auto& b : v.traces) {
      json steps = json::array();
      for (const auto& s : b.steps) steps.push_back(s.describe());
      t.push_back({{"contradiction", b.contradiction}, {"steps", steps}});
    }
    j["traces"] = t;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exclusivity graph toolkit: invariants, representations and SIC filters"};
  app.require_subcommand(1);
  Common c;

  auto common = [&](CLI::App* sub, bool with_ranks) {
    sub->add_option("inputs", c.inputs, "graph6 files ('-' or none for stdin)");
    if (with_ranks) {
      sub->add_option("--ranks", c.ranks, "uniform ranks, e.g. 1,2,3")->delimiter(',')->allow_extra_args(false);
      sub->add_option("--weights", c.weights, "comma-separated rational weight per vertex");
    }
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    auto* j = sub->add_flag("--json", c.json, "JSON output");
    auto* v = sub->add_flag("--csv", c.csv, "CSV output");
    j->excludes(v);
  };

  auto* alpha_cmd = app.add_subcommand("alpha", "weighted independence number");
  common(alpha_cmd, true);

  auto* chif_cmd = app.add_subcommand("chif", "exact weighted fractional chromatic number");
  common(chif_cmd, true);
  bool certificates = false;
  chif_cmd->add_flag("--certificates", certificates, "include the fractional cover and clique (JSON)");

  auto* theta_cmd = app.add_subcommand("theta", "certified weighted Lovasz number");
  common(theta_cmd, true);
  bool complement_flag = false;
  ThetaOptions theta_opts;
  theta_cmd->add_flag("--complement", complement_flag, "theta of the complement (theta bar)");
  theta_cmd->add_option("--gap", theta_opts.target_gap, "target duality gap");
  theta_cmd->add_option("--max-iterations", theta_opts.max_iterations, "interior point iteration cap");

  auto* blowup_cmd = app.add_subcommand("blowup", "replace each vertex by a clique of its rank");
  common(blowup_cmd, true);

  auto* cond_cmd = app.add_subcommand("conditions", "conditions 1-5 for each graph");
  common(cond_cmd, true);
  bool unstaged = false;
  cond_cmd->add_flag("--all", unstaged, "evaluate every condition even after a failed stage");

  auto* pipe_cmd = app.add_subcommand("pipeline", "filter a graph6 stream by conditions 1-5");
  common(pipe_cmd, true);
  std::optional<int> max_edges;
  std::string survivors_path;
  pipe_cmd->add_option("--max-edges", max_edges, "skip graphs with more edges (23 for the 13-vertex stream)");
  pipe_cmd->add_option("--survivors", survivors_path, "write survivors here instead of stdout");

  auto* findpr_cmd = app.add_subcommand("findpr", "seesaw search for a projective representation");
  common(findpr_cmd, true);
  PRSearchConfig pr;
  bool all_restarts = false, show_vectors = false;
  std::string traces_path;
  findpr_cmd->add_option("--dim,-d", pr.d, "target dimension")->required();
  findpr_cmd->add_option("--restarts", pr.restarts, "random restarts");
  findpr_cmd->add_option("--max-iterations", pr.max_iterations, "iterations per restart");
  findpr_cmd->add_option("--stop-ratio", pr.stop_ratio, "stop when delta(k-2)/delta(k) < 1 + ratio");
  findpr_cmd->add_option("--threshold", pr.found_threshold, "residual classifying a restart as found");
  findpr_cmd->add_flag("--all-restarts", all_restarts, "run every restart even after a success");
  findpr_cmd->add_flag("--vectors", show_vectors, "print the found vectors (JSON)");
  findpr_cmd->add_option("--traces", traces_path, "write restart,iteration,delta CSV here");

  auto* lrank_cmd = app.add_subcommand("lrank-check", "compare the rank polytope relaxation with STAB");
  common(lrank_cmd, false);

  auto* toh_cmd = app.add_subcommand("verify-toh", "exact checks of the 30 rank-2 projectors");
  common(toh_cmd, false);

  auto* cert_cmd = app.add_subcommand("certify", "rule-based proof that no 4-dimensional rank-one PR exists");
  common(cert_cmd, false);
  std::vector<std::string> merges;
  bool case2 = false, cert_traces = false;
  CertifierConfig cert_cfg;
  cert_cmd->add_option("--merge", merges, "merge vertices a,b first (1-indexed), repeatable");
  cert_cmd->add_flag("--toh-case2", case2, "run the six merged Toh graphs instead of reading input");
  cert_cmd->add_flag("--traces", cert_traces, "record rule traces of refuted branches");
  cert_cmd->add_option("--max-leaves", cert_cfg.max_leaves, "leaf cap");

  CLI11_PARSE(app, argc, argv);
  if (c.ranks.empty()) c.ranks = {1};
  Report report(c);

  try {
    if (alpha_cmd->parsed()) {
      for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
        for (const auto& [label, w] : weightings(c, g.order())) {
          auto a = alpha_weighted(g, w);
          report.add({{"graph6", rec}, {"weights", label}, {"alpha", to_string(a.value)}, {"set", one_indexed(a.set)}});
        }
      });
      report.finish();
    } else if (chif_cmd->parsed()) {
      for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
        for (const auto& [label, w] : weightings(c, g.order())) {
          auto f = chi_f(g, w);
          json row{{"graph6", rec}, {"weights", label}, {"chi_f", to_string(f.value)}, {"approx", to_double(f.value)}};
          if (certificates) {
            json cover = json::array();
            for (std::size_t k = 0; k < f.sets.size(); ++k)
              if (f.cover[k] != 0) cover.push_back({{"set", one_indexed(f.sets[k])}, {"x", to_string(f.cover[k])}});
            json clique = json::array();
            for (const auto& y : f.clique_weights) clique.push_back(to_string(y));
            row["cover"] = cover;
            row["clique"] = clique;
          }
          report.add(row);
        }
      });
      report.finish();
    } else if (theta_cmd->parsed()) {
      for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
        for (const auto& [label, w] : weightings(c, g.order())) {
          auto t = complement_flag ? theta_bar(g, w, theta_opts) : theta(g, w, theta_opts);
          json row{{"graph6", rec}, {"weights", label}};
          row.update(theta_json(t));
          if (t.certified) {
            auto ceil_t = ceil_certified(t);
            row["ceil"] = ceil_t ? json(*ceil_t) : json("ambiguous");
          }
          report.add(row);
        }
      });
      report.finish();
    } else if (blowup_cmd->parsed()) {
      for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
        for (const auto& [label, w] : weightings(c, g.order())) {
          if (!w.is_rank_vector()) throw ArgumentError("blowup needs positive integer ranks");
          Graph b = blowup(g, w);
          if (!c.json && !c.csv)
            std::cout << write_graph6(b) << '\n';
          else
            report.add({{"graph6", rec}, {"ranks", label}, {"order", b.order()}, {"size", b.size()},
                        {"blowup", write_graph6(b)}});
        }
      });
      report.finish();
    } else if (cond_cmd->parsed()) {
      ConditionOptions opts;
      opts.staged = !unstaged;
      for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
        auto rep = check_conditions(g, c.ranks, opts);
        auto tri = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
        json row{{"graph6", rec}, {"c1", rep.c1}, {"c2", rep.c2}, {"c3", tri(rep.c3)}};
        row["chi_f"] = rep.chi_f ? json(to_string(*rep.chi_f)) : json(nullptr);
        row["chi_f_deleted_min"] = rep.chi_f_deleted_min ? json(to_string(*rep.chi_f_deleted_min)) : json(nullptr);
        row["chi_f_deleted_max"] = rep.chi_f_deleted_max ? json(to_string(*rep.chi_f_deleted_max)) : json(nullptr);
        row["theta_bar_lower"] = rep.theta_bar ? json(rep.theta_bar->lower) : json(nullptr);
        row["theta_bar_upper"] = rep.theta_bar ? json(rep.theta_bar->upper) : json(nullptr);
        for (const auto& rc : rep.ranks) {
          std::string r = std::to_string(rc.rank);
          row["c4_r" + r] = tri(rc.c4);
          row["c5_r" + r] = tri(rc.c5);
          row["theta_ambiguous_r" + r] = rc.theta_ambiguous;
          row["survives_r" + r] = rep.survives(rc.rank);
        }
        report.add(row);
      });
      report.finish();
    } else if (pipe_cmd->parsed()) {
      PipelineOptions opts;
      opts.ranks = c.ranks;
      opts.max_edges = max_edges;
      opts.threads = c.threads;
      std::ofstream surv_file;
      std::ostream* surv = c.json ? nullptr : &std::cout;
      if (!survivors_path.empty()) {
        surv_file.open(survivors_path);
        if (!surv_file) throw IoError("cannot open " + survivors_path);
        surv = &surv_file;
      }
      PipelineResult res;
      auto run = [&](std::istream& in) {
        auto part = run_pipeline(in, opts, surv);
        // concatenate streams: counts add, survivor indices shift
        auto& a = res.counts;
        const auto& b = part.counts;
        if (a.ranks.empty()) {
          a = b;
        } else {
          a.total += b.total;
          a.after_c12 += b.after_c12;
          a.after_c123 += b.after_c123;
          for (std::size_t k = 0; k < a.ranks.size(); ++k) {
            a.after_c1234[k] += b.after_c1234[k];
            a.after_c12345[k] += b.after_c12345[k];
          }
          a.malformed += b.malformed;
          a.skipped_edge_cap += b.skipped_edge_cap;
          a.theta_ambiguous += b.theta_ambiguous;
        }
        for (auto& s : part.survivors) res.survivors.push_back(std::move(s));
      };
      if (c.inputs.empty()) c.inputs = {"-"};
      for (const auto& path : c.inputs) {
        if (path == "-") {
          run(std::cin);
          continue;
        }
        std::ifstream in(path);
        if (!in) throw IoError("cannot open " + path);
        run(in);
      }
      if (surv_file.is_open() && !surv_file) throw IoError("write error on " + survivors_path);
      const auto& k = res.counts;
      json counts{{"total", k.total}, {"after_c1_c2", k.after_c12}, {"after_c1_c3", k.after_c123}};
      json per = json::object();
      for (std::size_t i = 0; i < k.ranks.size(); ++i)
        per[std::to_string(k.ranks[i])] = {{"after_c1_c4", k.after_c1234[i]}, {"after_c1_c5", k.after_c12345[i]}};
      counts["ranks"] = per;
      counts["malformed"] = k.malformed;
      counts["skipped_edge_cap"] = k.skipped_edge_cap;
      counts["theta_ambiguous"] = k.theta_ambiguous;
      if (c.json) {
        json surv_json = json::array();
        for (const auto& s : res.survivors) surv_json.push_back({{"index", s.index}, {"graph6", s.graph6}, {"ranks", s.ranks}});
        std::cout << json{{"counts", counts}, {"survivors", surv_json}}.dump(2) << '\n';
      } else {
        std::cerr << "total " << k.total << "  C1&C2 " << k.after_c12 << "  C1-C3 " << k.after_c123;
        for (std::size_t i = 0; i < k.ranks.size(); ++i)
          std::cerr << "  r=" << k.ranks[i] << ": C1-C4 " << k.after_c1234[i] << " C1-C5 " << k.after_c12345[i];
        std::cerr << "  malformed " << k.malformed << '\n';
      }
    } else if (findpr_cmd->parsed()) {
      pr.seed = c.seed;
      pr.threads = c.threads;
      pr.stop_at_first_found = !all_restarts;
      pr.record_traces = !traces_path.empty();
      std::ofstream traces;
      if (!traces_path.empty()) {
        traces.open(traces_path);
        if (!traces) throw IoError("cannot open " + traces_path);
      }
      for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
        for (const auto& [label, w] : weightings(c, g.order())) {
          if (!w.is_rank_vector()) throw ArgumentError("findpr needs positive integer ranks");
          auto out = find_rankr_pr(g, w, pr);
          const auto& s = out.search;
          json row{{"graph6", rec}, {"ranks", label}, {"dimension", pr.d},
                   {"status", s.status == PRStatus::Found ? "found" : "not-found"},
                   {"best_residual", s.best_residual}, {"found_restart", s.found_restart},
                   {"restarts_run", s.restarts.size()}};
          if (out.projectors) row["verified"] = out.verification.ok;
          if (show_vectors && s.status == PRStatus::Found) {
            json cols = json::array();
            for (int k = 0; k < s.vectors.cols(); ++k) {
              json col = json::array();
              for (int i = 0; i < s.vectors.rows(); ++i) col.push_back({s.vectors(i, k).real(), s.vectors(i, k).imag()});
              cols.push_back(col);
            }
            row["vectors"] = cols;
          }
          report.add(row);
          if (traces.is_open()) write_traces_csv(traces, s);
        }
      });
      report.finish();
    } else if (lrank_cmd->parsed()) {
      for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
        auto rep = lrank_equals_stab(g);
        json failing = json::array();
        for (const auto& chk : rep.checks)
          if (!chk.holds) failing.push_back({{"facet", to_string(chk.facet)}, {"lrank_max", to_string(chk.lrank_maximum)}});
        report.add({{"graph6", rec}, {"lrank_equals_stab", rep.equal}, {"nontrivial_facets", rep.checks.size()},
                    {"violated", failing}});
      });
      report.finish();
    } else if (toh_cmd->parsed()) {
      const Graph& g = g_toh();
      auto p = build_toh_pr();
      auto ver = verify_pr(p, g);
      auto a = alpha_weighted(g, WeightVector::unit(g.order()));
      auto wit = witness_min_eig(p, WeightVector::unit(g.order()), a.value);
      RationalMatrix sum(p.dimension(), p.dimension());
      for (std::size_t k = 0; k < p.size(); ++k) sum += p.exact(k);
      RationalMatrix expect = RationalMatrix::identity(p.dimension());
      expect *= Rational(15, 2);
      report.add({{"projectors", p.size()}, {"dimension", p.dimension()}, {"orthogonality", ver.ok},
                  {"sum_is_15/2_identity", sum == expect}, {"alpha", to_string(a.value)},
                  {"min_eigenvalue", wit.exact_min_eigenvalue ? to_string(*wit.exact_min_eigenvalue) : std::to_string(wit.min_eigenvalue)},
                  {"witnessed", wit.witnessed}});
      report.finish();
    } else if (cert_cmd->parsed()) {
      cert_cfg.record_traces = cert_traces;
      if (case2) {
        for (const auto& e : gtoh_case2_report(cert_cfg)) {
          json row{{"merge", std::to_string(e.pair.first) + "," + std::to_string(e.pair.second)}};
          row.update(verdict_json(e.verdict, cert_traces));
          report.add(row);
        }
      } else {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& m : merges) {
          auto [a, b] = parse_pair(m);
          pairs.push_back({a - 1, b - 1});
        }
        for_each_graph(c.inputs, [&](const std::string& rec, const Graph& g) {
          json row{{"graph6", rec}};
          row.update(verdict_json(certify_no_rank1_4d(g, pairs, cert_cfg), cert_traces));
          report.add(row);
        });
      }
      report.finish();
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const ArgumentError& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kArgumentError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kOk;
}
