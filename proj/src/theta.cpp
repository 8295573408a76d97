#include "sic/theta.hpp"

#include "sic/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sic {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Slack for eigenvalues computed by a backward-stable symmetric eigensolver.
double eig_error(const MatrixXd& a) { return 32.0 * static_cast<double>(a.rows()) * kEps * a.norm(); }

// a <- (a + a^T) / 2 without the transpose aliasing the destination.
void symmetrize(MatrixXd& a) {
  MatrixXd s = 0.5 * (a + a.transpose());
  a = std::move(s);
}

double min_eig(const MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_eig(const MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(a.rows() - 1);
}

// Largest a with S + a dS positive definite (infinity if dS is psd).
double max_step(const MatrixXd& s, const MatrixXd& ds) {
  Eigen::LLT<MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) return 0;
  MatrixXd t = llt.matrixL().solve(ds);
  t = llt.matrixL().solve(t.transpose()).transpose();
  symmetrize(t);
  double lmin = min_eig(t);
  if (lmin >= 0) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

struct Problem {
  int n = 0;
  std::vector<Edge> edges;
  VectorXd sqrt_w;
  MatrixXd c;
  double weight_sum = 0;
};

struct Iterate {
  MatrixXd x;
  MatrixXd z;
  double t = 0;
  VectorXd y;
};

MatrixXd dual_slack(const Problem& p, double t, const VectorXd& y) {
  MatrixXd z = -p.c;
  z.diagonal().array() += t;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    const Edge& e = p.edges[k];
    z(e.u, e.v) += y(static_cast<Eigen::Index>(k));
    z(e.v, e.u) += y(static_cast<Eigen::Index>(k));
  }
  return z;
}

// Verified primal bound: zero the edge entries, shift by the smallest
// eigenvalue plus its error bound, and renormalize the trace.
double certified_lower(const Problem& p, const MatrixXd& x_in) {
  const int n = p.n;
  MatrixXd x = 0.5 * (x_in + x_in.transpose());
  for (const Edge& e : p.edges) x(e.u, e.v) = x(e.v, e.u) = 0;
  double shift = std::max(0.0, -min_eig(x)) + eig_error(x);
  double trace = x.trace() + n * shift;
  if (!(trace > 0)) return 0;
  double obj = p.sqrt_w.dot(x * p.sqrt_w) + shift * p.weight_sum;
  double abs_obj = p.sqrt_w.cwiseAbs().dot(x.cwiseAbs() * p.sqrt_w.cwiseAbs()) + shift * p.weight_sum;
  double rounding = 4.0 * (n * n + 4.0) * kEps * abs_obj;
  return std::max(0.0, (obj - rounding) / (trace * (1 + 4 * n * kEps)));
}

// Verified dual bound: any y is dual feasible once t covers the largest
// eigenvalue of C - sum y_e A_e.
double certified_upper(const Problem& p, const VectorXd& y) {
  MatrixXd s = dual_slack(p, 0.0, y);
  s = -s;
  return max_eig(s) + eig_error(s) + 4.0 * p.n * kEps * p.c.norm();
}

ThetaResult solve(const Problem& p, const ThetaOptions& opts) {
  const int n = p.n;
  const auto m = static_cast<Eigen::Index>(p.edges.size());
  ThetaResult out;
  if (n == 0 || p.weight_sum == 0) {
    out.certified = true;
    return out;
  }

  Iterate it;
  it.x = MatrixXd::Identity(n, n) / n;
  it.t = p.weight_sum + 1;
  it.y = VectorXd::Zero(m);
  it.z = dual_slack(p, it.t, it.y);

  double best_lower = 0;
  double best_upper = std::numeric_limits<double>::infinity();
  auto certify = [&] {
    best_lower = std::max(best_lower, certified_lower(p, it.x));
    best_upper = std::min(best_upper, certified_upper(p, it.y));
  };

  const Eigen::Index dim = m + 1;
  MatrixXd mm(dim, dim);
  VectorXd aw(dim);
  VectorXd b = VectorXd::Zero(dim);
  b(0) = 1;

  for (out.iterations = 0; out.iterations < opts.max_iterations; ++out.iterations) {
    double float_gap = it.t - p.c.cwiseProduct(it.x).sum();
    if (float_gap <= 0.1 * opts.target_gap || out.iterations % 10 == 9) {
      certify();
      if (best_upper - best_lower <= opts.target_gap) break;
    }

    Eigen::LLT<MatrixXd> zf(it.z);
    if (zf.info() != Eigen::Success) break;
    MatrixXd w = zf.solve(MatrixXd::Identity(n, n));
    symmetrize(w);
    const MatrixXd& x = it.x;
    MatrixXd wx = w * x;

    // M_kl = tr(A_k X A_l Z^{-1}) with A_0 = I and A_e = E_ij + E_ji
    mm(0, 0) = wx.trace();
    aw(0) = w.trace();
    for (Eigen::Index k = 0; k < m; ++k) {
      const Edge& e = p.edges[static_cast<std::size_t>(k)];
      mm(0, k + 1) = mm(k + 1, 0) = wx(e.u, e.v) + wx(e.v, e.u);
      aw(k + 1) = 2 * w(e.u, e.v);
      for (Eigen::Index l = 0; l <= k; ++l) {
        const Edge& f = p.edges[static_cast<std::size_t>(l)];
        int i = e.u, j = e.v, a = f.u, c = f.v;
        double v = x(j, a) * w(c, i) + x(j, c) * w(a, i) + x(i, a) * w(c, j) + x(i, c) * w(a, j);
        mm(k + 1, l + 1) = mm(l + 1, k + 1) = v;
      }
    }
    // Near the optimum M loses definiteness numerically. LDLT copes longer;
    // past that a small diagonal shift or a pivoted QR still gives a usable
    // direction, and the certified bounds never depend on its accuracy.
    Eigen::LLT<MatrixXd> mf(mm);
    Eigen::LDLT<MatrixXd> mf_ldlt;
    Eigen::ColPivHouseholderQR<MatrixXd> mf_qr;
    enum { kLlt, kLdlt, kQr } factor = kLlt;
    if (mf.info() != Eigen::Success) {
      mf_ldlt.compute(mm);
      factor = kLdlt;
      if (mf_ldlt.info() != Eigen::Success || !mm.allFinite()) {
        if (!mm.allFinite()) break;
        double scale = mm.diagonal().cwiseAbs().maxCoeff();
        bool shifted = false;
        for (double eps = 1e-14; eps <= 1e-8 && !shifted; eps *= 100) {
          mf.compute(mm + eps * scale * MatrixXd::Identity(dim, dim));
          shifted = mf.info() == Eigen::Success;
        }
        if (shifted) {
          factor = kLlt;
        } else {
          mf_qr.compute(mm);
          factor = kQr;
        }
      }
    }

    double mu = x.cwiseProduct(it.z).sum() / n;
    auto direction = [&](double target_mu, VectorXd& dy, MatrixXd& dz, MatrixXd& dx) {
      VectorXd rhs = target_mu * aw - b;
      dy = factor == kLlt ? VectorXd(mf.solve(rhs)) : factor == kLdlt ? VectorXd(mf_ldlt.solve(rhs)) : VectorXd(mf_qr.solve(rhs));
      dz = MatrixXd::Zero(n, n);
      dz.diagonal().array() += dy(0);
      for (Eigen::Index k = 0; k < m; ++k) {
        const Edge& e = p.edges[static_cast<std::size_t>(k)];
        dz(e.u, e.v) += dy(k + 1);
        dz(e.v, e.u) += dy(k + 1);
      }
      dx = target_mu * w - x - x * dz * w;
      symmetrize(dx);
    };

    VectorXd dy;
    MatrixXd dz, dx;
    direction(0.0, dy, dz, dx);
    double ap = std::min(1.0, max_step(x, dx));
    double ad = std::min(1.0, max_step(it.z, dz));
    double mu_aff = (x + ap * dx).cwiseProduct(it.z + ad * dz).sum() / n;
    double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 1e-4, 0.9);
    direction(sigma * mu, dy, dz, dx);
    ap = std::min(1.0, 0.95 * max_step(x, dx));
    ad = std::min(1.0, 0.95 * max_step(it.z, dz));
    if (!(ap > 0) || !(ad > 0)) break;

    it.x += ap * dx;
    symmetrize(it.x);
    it.t += ad * dy(0);
    it.y += ad * dy.tail(m);
    it.z = dual_slack(p, it.t, it.y);
  }
  certify();

  out.lower = best_lower;
  out.upper = std::max(best_upper, best_lower);
  out.gap = out.upper - out.lower;
  out.value = std::clamp(p.c.cwiseProduct(it.x).sum(), out.lower, out.upper);
  out.certified = out.gap <= opts.target_gap;
  return out;
}

}  // namespace

ThetaResult theta(const Graph& g, const WeightVector& w, const ThetaOptions& opts) {
  const int n = g.order();
  if (static_cast<int>(w.size()) != n) throw ArgumentError("weight vector length differs from vertex count");
  Problem p;
  p.n = n;
  p.edges = g.edges();
  p.sqrt_w.resize(n);
  for (int i = 0; i < n; ++i) {
    if (w[i] < 0) throw ArgumentError("theta needs nonnegative weights");
    double wi = to_double(w[i]);
    p.sqrt_w(i) = std::sqrt(wi);
    p.weight_sum += wi;
  }
  p.c = p.sqrt_w * p.sqrt_w.transpose();
  return solve(p, opts);
}

ThetaResult theta_bar(const Graph& g, const WeightVector& w, const ThetaOptions& opts) {
  return theta(complement(g), w, opts);
}

std::optional<long> ceil_certified(const ThetaResult& t) {
  if (!t.certified) throw ArgumentError("ceiling requested for an uncertified theta enclosure (" + describe(t) + ")");
  double lo = std::ceil(t.lower);
  double hi = std::ceil(t.upper);
  if (lo != hi) return std::nullopt;
  return static_cast<long>(lo);
}

std::string describe(const ThetaResult& t) {
  std::ostringstream os;
  os.precision(12);
  os << "[" << t.lower << ", " << t.upper << "] gap " << t.gap << (t.certified ? "" : " uncertified") << " after "
     << t.iterations << " iterations";
  return os.str();
}

}  // namespace sic
