#include "sic/exact_lp.hpp"

#include "sic/errors.hpp"

#include <algorithm>

namespace sic {

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Internal form: maximize c.x subject to A x <= b, x >= 0, stored as a
// dictionary  x_B(i) + sum_j T(i,j) x_N(j) = rhs(i),  z = z0 + sum_j d(j) x_N(j).
// Variables 0..n-1 are structural, n..n+m-1 slacks, n+m the phase-1 auxiliary.
class Dictionary {
 public:
  Dictionary(int n, const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& b)
      : n_(n), m_(static_cast<int>(rows.size())), k_(n), t_(static_cast<std::size_t>(m_) * n), rhs_(b) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n; ++j) t_[idx(i, j)] = rows[i][j];
      basic_.push_back(n + i);
    }
    for (int j = 0; j < n; ++j) nonbasic_.push_back(j);
    d_.assign(static_cast<std::size_t>(k_), Rational(0));
  }

  int aux() const { return n_ + m_; }

  bool feasible() const {
    return std::all_of(rhs_.begin(), rhs_.end(), [](const Rational& r) { return r >= 0; });
  }

  // Phase 1: returns false when the system is infeasible (farkas() then holds
  // the multipliers). On success the auxiliary is gone and the dictionary is
  // primal feasible.
  bool phase_one() {
    if (feasible()) return true;
    // append auxiliary column with coefficient -1 in every row
    std::vector<Rational> nt(static_cast<std::size_t>(m_) * (k_ + 1));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < k_; ++j) nt[static_cast<std::size_t>(i) * (k_ + 1) + j] = std::move(t_[idx(i, j)]);
      nt[static_cast<std::size_t>(i) * (k_ + 1) + k_] = -1;
    }
    t_ = std::move(nt);
    ++k_;
    nonbasic_.push_back(aux());
    d_.assign(static_cast<std::size_t>(k_), Rational(0));
    d_[k_ - 1] = -1;
    z0_ = 0;

    int leave = 0;
    for (int i = 1; i < m_; ++i) {
      if (rhs_[i] < rhs_[leave] || (rhs_[i] == rhs_[leave] && basic_[i] < basic_[leave])) leave = i;
    }
    pivot(leave, k_ - 1);
    if (run() != LPStatus::Optimal) throw NumericalError("phase 1 reported unbounded");
    if (z0_ < 0) {
      farkas_.assign(static_cast<std::size_t>(m_), Rational(0));
      for (int j = 0; j < k_; ++j) {
        if (nonbasic_[j] >= n_ && nonbasic_[j] < n_ + m_) farkas_[nonbasic_[j] - n_] = -d_[j];
      }
      return false;
    }
    // drive the auxiliary out of the basis if it sits there at level zero
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] != aux()) continue;
      int col = -1;
      for (int j = 0; j < k_; ++j) {
        if (nonbasic_[j] != aux() && t_[idx(i, j)] != 0 && (col < 0 || nonbasic_[j] < nonbasic_[col])) col = j;
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        remove_row(i);
      }
      break;
    }
    int col = static_cast<int>(std::find(nonbasic_.begin(), nonbasic_.end(), aux()) - nonbasic_.begin());
    remove_column(col);
    return true;
  }

  void set_objective(const std::vector<Rational>& c) {
    z0_ = 0;
    d_.assign(static_cast<std::size_t>(k_), Rational(0));
    for (int j = 0; j < k_; ++j) {
      if (nonbasic_[j] < n_) d_[j] = c[nonbasic_[j]];
    }
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= n_) continue;
      const Rational& cb = c[basic_[i]];
      if (cb == 0) continue;
      z0_ += cb * rhs_[i];
      for (int j = 0; j < k_; ++j) {
        const Rational& a = t_[idx(i, j)];
        if (a != 0) d_[j] -= cb * a;
      }
    }
  }

  LPStatus run() {
    while (true) {
      int s = -1;
      for (int j = 0; j < k_; ++j) {
        if (d_[j] > 0 && (s < 0 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s < 0) return LPStatus::Optimal;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        const Rational& a = t_[idx(i, s)];
        if (a <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (r < 0 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r < 0) {
        unbounded_col_ = s;
        return LPStatus::Unbounded;
      }
      pivot(r, s);
    }
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(static_cast<std::size_t>(n_), Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[basic_[i]] = rhs_[i];
    }
    return x;
  }

  // Internal duals y >= 0 per original row, read off the slack reduced costs.
  std::vector<Rational> duals(int rows) const {
    std::vector<Rational> y(static_cast<std::size_t>(rows), Rational(0));
    for (int j = 0; j < k_; ++j) {
      if (nonbasic_[j] >= n_ && nonbasic_[j] < n_ + rows) y[nonbasic_[j] - n_] = -d_[j];
    }
    return y;
  }

  std::vector<Rational> ray() const {
    std::vector<Rational> dir(static_cast<std::size_t>(n_), Rational(0));
    const int s = unbounded_col_;
    if (nonbasic_[s] < n_) dir[nonbasic_[s]] = 1;
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) dir[basic_[i]] = -t_[idx(i, s)];
    }
    return dir;
  }

  const Rational& value() const { return z0_; }
  const std::vector<Rational>& farkas() const { return farkas_; }
  long pivots() const { return pivots_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * k_ + j; }

  void pivot(int r, int s) {
    ++pivots_;
    const Rational inv = 1 / t_[idx(r, s)];
    for (int j = 0; j < k_; ++j) {
      if (j == s) {
        t_[idx(r, j)] = inv;
      } else if (t_[idx(r, j)] != 0) {
        t_[idx(r, j)] *= inv;
      }
    }
    rhs_[r] *= inv;
    // nonzero pattern of the pivot row
    std::vector<int> nz;
    for (int j = 0; j < k_; ++j) {
      if (j != s && t_[idx(r, j)] != 0) nz.push_back(j);
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rational f = t_[idx(i, s)];
      if (f == 0) continue;
      for (int j : nz) t_[idx(i, j)] -= f * t_[idx(r, j)];
      t_[idx(i, s)] = -f * inv;
      if (rhs_[r] != 0) rhs_[i] -= f * rhs_[r];
    }
    if (d_[s] != 0) {
      Rational f = d_[s];
      for (int j : nz) d_[j] -= f * t_[idx(r, j)];
      d_[s] = -f * inv;
      z0_ += f * rhs_[r];
    }
    std::swap(basic_[r], nonbasic_[s]);
  }

  void remove_row(int r) {
    std::vector<Rational> nt;
    nt.reserve(static_cast<std::size_t>(m_ - 1) * k_);
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      for (int j = 0; j < k_; ++j) nt.push_back(std::move(t_[idx(i, j)]));
    }
    t_ = std::move(nt);
    rhs_.erase(rhs_.begin() + r);
    basic_.erase(basic_.begin() + r);
    --m_;
  }

  void remove_column(int c) {
    std::vector<Rational> nt;
    nt.reserve(static_cast<std::size_t>(m_) * (k_ - 1));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < k_; ++j) {
        if (j != c) nt.push_back(std::move(t_[idx(i, j)]));
      }
    }
    t_ = std::move(nt);
    d_.erase(d_.begin() + c);
    nonbasic_.erase(nonbasic_.begin() + c);
    --k_;
  }

  int n_;
  int m_;
  int k_;
  std::vector<Rational> t_;
  std::vector<Rational> rhs_;
  std::vector<Rational> d_;
  Rational z0_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<Rational> farkas_;
  int unbounded_col_ = -1;
  long pivots_ = 0;
};

struct RowOrigin {
  int row;
  Rational sign;  // +1 if copied, -1 if negated
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

ExactLPSolution solve_lp_exact(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (static_cast<int>(lp.objective.size()) != n) throw ArgumentError("objective length differs from num_vars");
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> b;
  std::vector<RowOrigin> origin;
  for (int i = 0; i < static_cast<int>(lp.constraints.size()); ++i) {
    const auto& con = lp.constraints[i];
    if (static_cast<int>(con.coeffs.size()) != n) {
      throw ArgumentError("constraint " + std::to_string(i) + " has wrong coefficient count");
    }
    if (con.relation != Relation::GreaterEqual) {
      rows.push_back(con.coeffs);
      b.push_back(con.rhs);
      origin.push_back({i, Rational(1)});
    }
    if (con.relation != Relation::LessEqual) {
      std::vector<Rational> neg = con.coeffs;
      for (auto& a : neg) a = -a;
      rows.push_back(std::move(neg));
      b.push_back(-con.rhs);
      origin.push_back({i, Rational(-1)});
    }
  }
  std::vector<Rational> c = lp.objective;
  if (lp.sense == Sense::Minimize) {
    for (auto& x : c) x = -x;
  }
  const int internal_rows = static_cast<int>(rows.size());

  auto fold = [&](const std::vector<Rational>& internal) {
    std::vector<Rational> y(lp.constraints.size(), Rational(0));
    for (int i = 0; i < internal_rows; ++i) {
      if (internal[i] != 0) y[origin[i].row] += origin[i].sign * internal[i];
    }
    return y;
  };

  Dictionary dict(n, rows, b);
  ExactLPSolution sol;
  if (!dict.phase_one()) {
    sol.status = LPStatus::Infeasible;
    sol.ray = fold(dict.farkas());
    sol.pivots = dict.pivots();
  } else {
    dict.set_objective(c);
    LPStatus st = dict.run();
    sol.status = st;
    sol.primal = dict.primal();
    sol.pivots = dict.pivots();
    if (st == LPStatus::Optimal) {
      sol.value = lp.sense == Sense::Minimize ? Rational(-dict.value()) : dict.value();
      sol.dual = fold(dict.duals(internal_rows));
      if (lp.sense == Sense::Minimize) {
        for (auto& y : sol.dual) y = -y;
      }
    } else {
      sol.ray = dict.ray();
    }
  }
  if (auto err = verify_certificate(lp, sol); !err.empty()) {
    throw NumericalError("exact simplex produced an invalid certificate: " + err);
  }
  return sol;
}

std::string verify_certificate(const LinearProgram& lp, const ExactLPSolution& sol) {
  const int n = lp.num_vars;
  const bool maximize = lp.sense == Sense::Maximize;
  auto primal_feasible = [&]() -> std::string {
    if (static_cast<int>(sol.primal.size()) != n) return "primal has wrong length";
    for (int j = 0; j < n; ++j) {
      if (sol.primal[j] < 0) return "primal variable " + std::to_string(j) + " is negative";
    }
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
      const auto& con = lp.constraints[i];
      Rational lhs = dot(con.coeffs, sol.primal);
      bool ok = con.relation == Relation::LessEqual      ? lhs <= con.rhs
                : con.relation == Relation::GreaterEqual ? lhs >= con.rhs
                                                         : lhs == con.rhs;
      if (!ok) return "primal violates constraint " + std::to_string(i);
    }
    return {};
  };
  // sign pattern of multipliers under the maximization convention
  auto sign_ok = [&](const std::vector<Rational>& y, bool flip) -> std::string {
    if (y.size() != lp.constraints.size()) return "multiplier vector has wrong length";
    for (std::size_t i = 0; i < y.size(); ++i) {
      Rational v = flip ? Rational(-y[i]) : y[i];
      Relation rel = lp.constraints[i].relation;
      if ((rel == Relation::LessEqual && v < 0) || (rel == Relation::GreaterEqual && v > 0)) {
        return "multiplier " + std::to_string(i) + " has the wrong sign";
      }
    }
    return {};
  };
  auto transpose_times = [&](const std::vector<Rational>& y) {
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (lp.constraints[i].coeffs[j] != 0) out[j] += y[i] * lp.constraints[i].coeffs[j];
      }
    }
    return out;
  };
  auto rhs_dot = [&](const std::vector<Rational>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] != 0) s += y[i] * lp.constraints[i].rhs;
    }
    return s;
  };

  switch (sol.status) {
    case LPStatus::Optimal: {
      if (auto e = primal_feasible(); !e.empty()) return e;
      if (auto e = sign_ok(sol.dual, !maximize); !e.empty()) return e;
      auto aty = transpose_times(sol.dual);
      for (int j = 0; j < n; ++j) {
        if (maximize ? aty[j] < lp.objective[j] : aty[j] > lp.objective[j]) {
          return "dual constraint for variable " + std::to_string(j) + " violated";
        }
      }
      if (dot(lp.objective, sol.primal) != sol.value) return "primal objective differs from value";
      if (rhs_dot(sol.dual) != sol.value) return "dual objective differs from value";
      return {};
    }
    case LPStatus::Infeasible: {
      if (auto e = sign_ok(sol.ray, false); !e.empty()) return e;
      auto aty = transpose_times(sol.ray);
      for (int j = 0; j < n; ++j) {
        if (aty[j] < 0) return "Farkas multipliers give a negative column combination";
      }
      if (rhs_dot(sol.ray) >= 0) return "Farkas multipliers do not separate";
      return {};
    }
    case LPStatus::Unbounded: {
      if (auto e = primal_feasible(); !e.empty()) return e;
      if (static_cast<int>(sol.ray.size()) != n) return "ray has wrong length";
      for (int j = 0; j < n; ++j) {
        if (sol.ray[j] < 0) return "ray leaves the nonnegative orthant";
      }
      for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        const auto& con = lp.constraints[i];
        Rational lhs = dot(con.coeffs, sol.ray);
        bool ok = con.relation == Relation::LessEqual      ? lhs <= 0
                  : con.relation == Relation::GreaterEqual ? lhs >= 0
                                                           : lhs == 0;
        if (!ok) return "ray violates recession condition of constraint " + std::to_string(i);
      }
      Rational gain = dot(lp.objective, sol.ray);
      if (maximize ? gain <= 0 : gain >= 0) return "ray does not improve the objective";
      return {};
    }
  }
  return "unknown status";
}

}  // namespace sic
