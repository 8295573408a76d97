#include "sic/witness.hpp"

#include "sic/builtin_graphs.hpp"
#include "sic/datasets.hpp"
#include "sic/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace sic {

namespace {

using Eigen::MatrixXcd;

std::string label(std::size_t k) { return "projector " + std::to_string(k); }

void check_exact(const ProjectorSet& p, const Graph& g, std::vector<std::string>& out) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    const RationalMatrix& pi = p.exact(k);
    if (!(pi == pi.transpose())) out.push_back(label(k) + " is not Hermitian");
    if (!(pi * pi == pi)) out.push_back(label(k) + " is not idempotent");
    if (pi.trace() != p.ranks()[k]) out.push_back(label(k) + " has trace " + to_string(pi.trace()) + ", declared rank " + std::to_string(p.ranks()[k]));
  }
  for (const Edge& e : g.edges()) {
    if (!(p.exact(e.u) * p.exact(e.v)).is_zero()) {
      out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": product is nonzero");
    }
  }
}

void check_float(const ProjectorSet& p, const Graph& g, double tol, std::vector<std::string>& out) {
  std::vector<MatrixXcd> m;
  for (std::size_t k = 0; k < p.size(); ++k) m.push_back(p.approx(k));
  for (std::size_t k = 0; k < m.size(); ++k) {
    if ((m[k] - m[k].adjoint()).cwiseAbs().maxCoeff() > tol) out.push_back(label(k) + " is not Hermitian");
    if ((m[k] * m[k] - m[k]).cwiseAbs().maxCoeff() > tol) out.push_back(label(k) + " is not idempotent");
    if (std::abs(m[k].trace() - std::complex<double>(p.ranks()[k])) > tol * p.dimension()) {
      out.push_back(label(k) + " trace differs from declared rank");
    }
  }
  for (const Edge& e : g.edges()) {
    double worst = (m[e.u] * m[e.v]).cwiseAbs().maxCoeff();
    if (worst > tol) {
      out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": product entry " + std::to_string(worst));
    }
  }
}

// Characteristic polynomial det(xI - A), coefficients c_0..c_n (c_n = 1), by
// Faddeev-LeVerrier.
std::vector<Rational> char_poly(const RationalMatrix& a) {
  const int n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / k;
  }
  return c;
}

Rational eval(const std::vector<Rational>& c, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Divides by (x - root); exact when root is a zero.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& root) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    carry = carry * root + c[i + 1];
    q[i] = carry;
  }
  return q;
}

std::optional<std::vector<Rational>> exact_eigenvalues(const RationalMatrix& a) {
  const int n = a.rows();
  Integer lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(a(i, j)));
  RationalMatrix scaled = a * Rational(lcm);
  // A symmetric integer matrix: every rational eigenvalue is an integer.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(scaled.to_double(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return std::nullopt;
  std::vector<Rational> poly = char_poly(scaled);
  std::vector<Rational> roots;
  for (Eigen::Index i = 0; i < n; ++i) {
    double approx = es.eigenvalues()(i);
    if (!std::isfinite(approx) || std::abs(approx) > 1e15) return std::nullopt;
    Rational candidate(static_cast<long long>(std::llround(approx)));
    if (eval(poly, candidate) != 0) return std::nullopt;
    poly = deflate(poly, candidate);
    roots.push_back(candidate / Rational(lcm));
  }
  return roots;
}

}  // namespace

PRVerification verify_pr(const ProjectorSet& p, const Graph& g, double tolerance) {
  if (static_cast<int>(p.size()) != g.order()) {
    throw ArgumentError("projector count " + std::to_string(p.size()) + " differs from vertex count " + std::to_string(g.order()));
  }
  PRVerification out;
  if (p.mode() == ProjectorSet::Mode::Exact) {
    check_exact(p, g, out.violations);
  } else {
    check_float(p, g, tolerance, out.violations);
  }
  out.ok = out.violations.empty();
  return out;
}

ProjectorSet build_toh_pr() {
  auto rows = datasets::parse_int_table(datasets::kp40_rays());
  if (rows.size() != 8) throw DataCorruptionError("kp40_rays: expected 8 coordinate rows");
  for (const auto& row : rows)
    if (row.size() != 40) throw DataCorruptionError("kp40_rays: expected 40 columns");
  auto ray = [&](int col) {
    std::vector<int> r(8);
    for (int i = 0; i < 8; ++i) r[i] = rows[i][col];
    return r;
  };

  std::vector<RationalMatrix> projectors;
  for (const auto& pair : datasets::parse_int_table(datasets::toh_pairs())) {
    if (pair.size() != 2 || pair[0] < 1 || pair[0] > 40 || pair[1] < 1 || pair[1] > 40) {
      throw DataCorruptionError("toh_pairs: rows must hold two ray indices in 1..40");
    }
    auto a = ray(pair[0] - 1);
    auto b = ray(pair[1] - 1);
    int dot = 0;
    for (int i = 0; i < 8; ++i) dot += a[i] * b[i];
    if (dot != 0) throw DataCorruptionError("toh_pairs: rays " + std::to_string(pair[0]) + " and " + std::to_string(pair[1]) + " are not orthogonal");
    projectors.push_back(rank_one_projector(a) + rank_one_projector(b));
  }
  if (projectors.size() != 30) throw DataCorruptionError("toh_pairs: expected 30 pairs");

  RationalMatrix sum(8, 8);
  for (const auto& p : projectors) sum += p;
  if (!(sum == RationalMatrix::identity(8) * Rational(15, 2))) {
    throw DataCorruptionError("Toh projectors do not sum to (15/2) I");
  }
  return ProjectorSet::exact(8, std::move(projectors), std::vector<int>(30, 2));
}

ProjectorSet yu_oh_projectors() {
  std::vector<RationalMatrix> projectors;
  for (const auto& r : yu_oh_rays()) projectors.push_back(rank_one_projector(r));
  std::vector<int> ranks(projectors.size(), 1);
  return ProjectorSet::exact(3, std::move(projectors), std::move(ranks));
}

WitnessReport witness_min_eig(const ProjectorSet& p, const WeightVector& w, const Rational& alpha) {
  if (w.size() != p.size()) throw ArgumentError("weight vector length differs from projector count");
  const int d = p.dimension();
  WitnessReport out;
  out.weights = w;
  out.alpha = alpha;

  if (p.mode() == ProjectorSet::Mode::Exact && d <= 8) {
    RationalMatrix op = RationalMatrix::identity(d) * Rational(-alpha);
    for (std::size_t k = 0; k < p.size(); ++k) op += p.exact(k) * w[k];
    if (auto eig = exact_eigenvalues(op)) {
      Rational lo = *std::min_element(eig->begin(), eig->end());
      out.exact_min_eigenvalue = lo;
      out.min_eigenvalue = to_double(lo);
      out.witnessed = lo > 0;
      return out;
    }
  }

  MatrixXcd op = -to_double(alpha) * MatrixXcd::Identity(d, d);
  for (std::size_t k = 0; k < p.size(); ++k) op += to_double(w[k]) * p.approx(k);
  MatrixXcd sym = 0.5 * (op + op.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sym);
  if (es.info() != Eigen::Success) throw NumericalError("witness eigendecomposition failed");
  const MatrixXcd& v = es.eigenvectors();
  MatrixXcd b = v.adjoint() * sym * v;
  const double eps = std::numeric_limits<double>::epsilon();
  double radius = 0;
  double lowest_disc = std::numeric_limits<double>::infinity();
  for (int i = 0; i < d; ++i) {
    double r = 0;
    for (int j = 0; j < d; ++j)
      if (j != i) r += std::abs(b(i, j));
    lowest_disc = std::min(lowest_disc, b(i, i).real() - r);
    radius = std::max(radius, r);
  }
  double orthogonality = (v.adjoint() * v - MatrixXcd::Identity(d, d)).norm();
  double lambda = es.eigenvalues()(0);
  out.min_eigenvalue = lambda;
  out.error_bound = std::abs(lambda - lowest_disc) + radius + sym.norm() * (orthogonality + 8.0 * d * eps) +
                    (op - sym).norm();
  out.witnessed = lambda - out.error_bound > 0;
  return out;
}

}  // namespace sic
