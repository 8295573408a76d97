#include "sic/projectors.hpp"

#include "sic/errors.hpp"

namespace sic {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& q : data_)
    if (q != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = sic::to_double((*this)(i, j));
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("matrix shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("matrix shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (Rational& q : data_) q *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ArgumentError("matrix shapes do not compose");
  RationalMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix rank_one_projector(std::span<const int> ray) {
  const int d = static_cast<int>(ray.size());
  long norm = 0;
  for (int x : ray) norm += static_cast<long>(x) * x;
  if (norm == 0) throw ArgumentError("zero ray");
  RationalMatrix p(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(i, j) = Rational(static_cast<long>(ray[i]) * ray[j], norm);
  return p;
}

ProjectorSet ProjectorSet::exact(int d, std::vector<RationalMatrix> projectors, std::vector<int> ranks) {
  if (projectors.size() != ranks.size()) throw ArgumentError("one rank per projector is required");
  for (const auto& p : projectors)
    if (p.rows() != d || p.cols() != d) throw ArgumentError("projector dimension differs from d");
  ProjectorSet s;
  s.mode_ = Mode::Exact;
  s.d_ = d;
  s.exact_ = std::move(projectors);
  s.ranks_ = std::move(ranks);
  return s;
}

ProjectorSet ProjectorSet::floating(int d, std::vector<Eigen::MatrixXcd> projectors, std::vector<int> ranks) {
  if (projectors.size() != ranks.size()) throw ArgumentError("one rank per projector is required");
  for (const auto& p : projectors)
    if (p.rows() != d || p.cols() != d) throw ArgumentError("projector dimension differs from d");
  ProjectorSet s;
  s.mode_ = Mode::Float;
  s.d_ = d;
  s.float_ = std::move(projectors);
  s.ranks_ = std::move(ranks);
  return s;
}

const RationalMatrix& ProjectorSet::exact(std::size_t k) const {
  if (mode_ != Mode::Exact) throw ArgumentError("projector set holds floating-point matrices");
  return exact_.at(k);
}

Eigen::MatrixXcd ProjectorSet::approx(std::size_t k) const {
  if (mode_ == Mode::Float) return float_.at(k);
  return exact_.at(k).to_double().cast<std::complex<double>>();
}

}  // namespace sic
