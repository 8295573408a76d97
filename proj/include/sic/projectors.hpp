#pragma once

#include "sic/rational.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace sic {

/// Dense real matrix over exact rationals; sized for d <= a few dozen.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Rational trace() const;
  bool is_zero() const;
  RationalMatrix transpose() const;
  Eigen::MatrixXd to_double() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// r r^T / |r|^2 for a nonzero integer ray.
RationalMatrix rank_one_projector(std::span<const int> ray);

/// Projectors Pi_1..Pi_n on C^d with declared ranks. Exact sets hold real
/// rational matrices; float sets hold complex ones.
class ProjectorSet {
 public:
  enum class Mode { Exact, Float };

  static ProjectorSet exact(int d, std::vector<RationalMatrix> projectors, std::vector<int> ranks);
  static ProjectorSet floating(int d, std::vector<Eigen::MatrixXcd> projectors, std::vector<int> ranks);

  Mode mode() const { return mode_; }
  int dimension() const { return d_; }
  std::size_t size() const { return ranks_.size(); }
  const std::vector<int>& ranks() const { return ranks_; }

  /// Exact-mode access; throws ArgumentError in float mode.
  const RationalMatrix& exact(std::size_t k) const;
  /// Float view, available in both modes.
  Eigen::MatrixXcd approx(std::size_t k) const;

 private:
  Mode mode_ = Mode::Exact;
  int d_ = 0;
  std::vector<int> ranks_;
  std::vector<RationalMatrix> exact_;
  std::vector<Eigen::MatrixXcd> float_;
};

}  // namespace sic
