#include "sic/seesaw.hpp"

#include "sic/errors.hpp"
#include "sic/witness.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <complex>
#include <random>
#include <thread>

namespace sic {

namespace {

using cd = std::complex<double>;
using Eigen::MatrixXcd;

void hermitize(MatrixXcd& a) {
  MatrixXcd s = 0.5 * (a + a.adjoint());
  a = std::move(s);
}

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  MatrixXcd vectors;
};

// Eigen's tridiagonal QR occasionally stalls on tightly clustered spectra
// (converged Gram matrices); a diagonal shift leaves the eigenvectors alone.
Eigensystem eigensolve(const GramMatrix& x) {
  const double scale = x.rows() > 0 ? x.norm() / std::sqrt(static_cast<double>(x.rows())) : 0.0;
  for (double factor : {0.0, 0.37, -0.61, 1.13}) {
    double shift = factor * scale;
    MatrixXcd shifted = x;
    shifted.diagonal().array() -= shift;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(shifted);
    if (es.info() == Eigen::Success) return {es.eigenvalues().array() + shift, es.eigenvectors()};
  }
  throw NumericalError("Hermitian eigendecomposition failed (Frobenius norm " + std::to_string(x.norm()) + ")");
}

// Rows sqrt(lambda_k) phi_k^dagger for the d largest eigenvalues, clipped at 0.
MatrixXcd extract_vectors(const GramMatrix& x, int d) {
  auto es = eigensolve(x);
  const auto n = x.rows();
  const int keep = static_cast<int>(std::min<Eigen::Index>(d, n));
  MatrixXcd y = MatrixXcd::Zero(d, n);
  for (int k = 0; k < keep; ++k) {
    Eigen::Index idx = n - 1 - k;
    double lambda = std::max(0.0, es.values(idx));
    y.row(k) = std::sqrt(lambda) * es.vectors.col(idx).adjoint();
  }
  return y;
}

// Normalizes the columns in place and evaluates the least-squares objective
// sum_k (|y_k|^2 - 1)^2 + sum_edges |y_l^dagger y_k|^2.
double normalize_and_score(MatrixXcd& y, const Graph& g) {
  double score = 0;
  for (Eigen::Index k = 0; k < y.cols(); ++k) {
    double norm = y.col(k).norm();
    if (norm > 0) {
      y.col(k) /= norm;
    } else {
      score += 1;
    }
  }
  for (const Edge& e : g.edges()) score += std::norm(y.col(e.u).dot(y.col(e.v)));
  return score;
}

MatrixXcd random_start(int d, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  MatrixXcd y(d, n);
  for (int k = 0; k < n; ++k) {
    double norm = 0;
    while (norm == 0) {
      for (int i = 0; i < d; ++i) y(i, k) = cd(gauss(rng), gauss(rng));
      norm = y.col(k).norm();
    }
    y.col(k) /= norm;
  }
  return y;
}

struct RestartResult {
  RestartRecord record;
  MatrixXcd vectors;
};

RestartResult run_restart(const Graph& g, const PRSearchConfig& cfg, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  const int n = g.order();

  RestartResult out;
  RestartRecord& rec = out.record;
  rec.restart = restart;

  MatrixXcd y0 = random_start(cfg.d, n, rng);
  GramMatrix x = y0.adjoint() * y0;  // starts on the rank side
  GramMatrix last_rank = x;
  std::vector<double> deltas;
  deltas.reserve(64);

  for (int j = 1; j <= cfg.max_iterations; ++j) {
    bool to_affine = j % 2 == 1;
    Projection p = to_affine ? project_affine(x, g) : project_rank_psd(x, cfg.d);
    x = std::move(p.matrix);
    if (!to_affine) last_rank = x;
    double delta = std::sqrt(std::max(0.0, p.residual));
    if (!deltas.empty() && delta > deltas.back() + 1e-12) rec.monotone = false;
    deltas.push_back(delta);
    rec.iterations = j;

    if (delta == 0) {
      rec.converged = true;
      break;
    }
    std::size_t k = deltas.size() - 1;
    if (k >= 2 && deltas[k - 2] / deltas[k] < 1 + cfg.stop_ratio) {
      rec.converged = true;
      break;
    }
  }

  rec.final_delta = deltas.empty() ? 0 : deltas.back();
  out.vectors = extract_vectors(last_rank, cfg.d);
  rec.residual = normalize_and_score(out.vectors, g);
  rec.found = rec.residual <= cfg.found_threshold;
  if (cfg.record_traces) rec.deltas = std::move(deltas);
  return out;
}

void check_config(const PRSearchConfig& cfg) {
  if (cfg.d < 1) throw ArgumentError("dimension must be at least 1");
  if (cfg.restarts < 1) throw ArgumentError("at least one restart is required");
  if (!(cfg.stop_ratio > 0)) throw ArgumentError("stop ratio must be positive");
  if (!(cfg.found_threshold > 0)) throw ArgumentError("found threshold must be positive");
  if (cfg.max_iterations < 1) throw ArgumentError("iteration cap must be positive");
}

}  // namespace

Projection project_rank_psd(const GramMatrix& x, int d) {
  if (x.rows() != x.cols()) throw ArgumentError("Gram matrix must be square");
  auto es = eigensolve(x);
  const auto n = x.rows();
  Projection out;
  out.matrix = GramMatrix::Zero(n, n);
  // eigenvalues ascend; keep the top d nonnegative ones
  for (Eigen::Index idx = n - 1, kept = 0; idx >= 0; --idx) {
    double lambda = es.values(idx);
    if (lambda >= 0 && kept < d) {
      auto phi = es.vectors.col(idx);
      out.matrix.noalias() += lambda * phi * phi.adjoint();
      ++kept;
    } else {
      out.residual += lambda * lambda;
    }
  }
  hermitize(out.matrix);
  return out;
}

Projection project_affine(const GramMatrix& x, const Graph& g) {
  if (x.rows() != g.order() || x.cols() != g.order()) throw ArgumentError("Gram matrix size differs from vertex count");
  Projection out;
  out.matrix = x;
  for (int k = 0; k < g.order(); ++k) {
    out.residual += std::norm(cd(1.0) - x(k, k));
    out.matrix(k, k) = 1;
  }
  for (const Edge& e : g.edges()) {
    out.residual += std::norm(x(e.u, e.v)) + std::norm(x(e.v, e.u));
    out.matrix(e.u, e.v) = 0;
    out.matrix(e.v, e.u) = 0;
  }
  return out;
}

PRSearchOutcome find_rank1_pr(const Graph& g, const PRSearchConfig& cfg) {
  check_config(cfg);
  std::vector<std::optional<RestartResult>> results(static_cast<std::size_t>(cfg.restarts));
  std::atomic<int> next{0};
  std::atomic<int> first_found{INT_MAX};

  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= cfg.restarts) return;
      if (cfg.stop_at_first_found && i > first_found.load()) continue;
      RestartResult r = run_restart(g, cfg, i);
      if (r.record.found) {
        int cur = first_found.load();
        while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
        }
      }
      results[static_cast<std::size_t>(i)] = std::move(r);
    }
  };
  int threads = std::max(1, std::min(cfg.threads, cfg.restarts));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  PRSearchOutcome out;
  int last = cfg.stop_at_first_found ? std::min(first_found.load(), cfg.restarts - 1) : cfg.restarts - 1;
  out.best_residual = INFINITY;
  for (int i = 0; i <= last; ++i) {
    RestartResult& r = *results[static_cast<std::size_t>(i)];
    if (r.record.residual < out.best_residual) out.best_residual = r.record.residual;
    if (r.record.found && out.found_restart < 0) {
      out.found_restart = i;
      out.status = PRStatus::Found;
      out.vectors = r.vectors;
      out.gram = r.vectors.adjoint() * r.vectors;
    }
    out.restarts.push_back(std::move(r.record));
  }
  return out;
}

RankRSearchOutcome find_rankr_pr(const Graph& g, const WeightVector& r, const PRSearchConfig& cfg) {
  std::vector<int> ranks = r.ranks();
  if (static_cast<int>(ranks.size()) != g.order()) throw ArgumentError("rank vector length differs from vertex count");
  RankRSearchOutcome out;
  out.search = find_rank1_pr(blowup(g, ranks), cfg);
  if (out.search.status != PRStatus::Found) return out;

  std::vector<MatrixXcd> projectors;
  Eigen::Index offset = 0;
  for (int rk : ranks) {
    MatrixXcd block = out.search.vectors.middleCols(offset, rk);
    offset += rk;
    Eigen::HouseholderQR<MatrixXcd> qr(block);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(cfg.d, rk);
    MatrixXcd pi = q * q.adjoint();
    hermitize(pi);
    projectors.push_back(std::move(pi));
  }
  out.projectors = ProjectorSet::floating(cfg.d, std::move(projectors), ranks);
  out.verification = verify_pr(*out.projectors, g);
  return out;
}

void write_traces_csv(std::ostream& out, const PRSearchOutcome& outcome) {
  out << "restart,iteration,delta\n";
  out.precision(17);
  for (const RestartRecord& r : outcome.restarts)
    for (std::size_t j = 0; j < r.deltas.size(); ++j) out << r.restart << ',' << j + 1 << ',' << r.deltas[j] << '\n';
}

}  // namespace sic
