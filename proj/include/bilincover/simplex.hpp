// Copyright 2026 The bilincover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense bounded-variable simplex for the small LPs of the cutting-plane loop.
//
// Every row i gets a logical variable s_i = a_i x whose bounds encode the
// row sense, so all constraints are homogeneous and the state is a
// dictionary
//
//   x_B = T x_N,    z = d^T x_N,
//
// with one column per structural variable. Nonbasic variables sit at a bound
// (or at zero when free). Cold solves run a primal phase 1 / phase 2; rows
// added after a solve keep the basis dual feasible, so re-solves start with
// the dual simplex. Dantzig pricing switches to Bland's rule after a run of
// degenerate pivots.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bilincover {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { kGreaterEqual, kLessEqual, kEqual };

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
  RowSense sense = RowSense::kGreaterEqual;
  double rhs = 0.0;
};

struct LpProblem {
  std::vector<double> objective;  // minimized
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_variable(double cost, double lo = 0.0, double hi = kInf) {
    objective.push_back(cost);
    lower.push_back(lo);
    upper.push_back(hi);
    return num_vars() - 1;
  }
  int add_row(LpRow row) {
    rows.push_back(std::move(row));
    return num_rows() - 1;
  }

  void validate() const {
    if (objective.empty()) throw std::invalid_argument("LP has no variables");
    if (lower.size() != objective.size() || upper.size() != objective.size())
      throw std::invalid_argument("LP bound vectors do not match the objective");
    for (std::size_t j = 0; j < objective.size(); ++j) {
      if (!std::isfinite(objective[j]))
        throw std::invalid_argument("non-finite objective coefficient");
      if (lower[j] > upper[j] || std::isnan(lower[j]) || std::isnan(upper[j]))
        throw std::invalid_argument("empty bound interval on variable " +
                                    std::to_string(j));
    }
    for (const LpRow& row : rows) {
      if (!std::isfinite(row.rhs)) throw std::invalid_argument("non-finite rhs");
      for (const auto& [j, a] : row.coeffs) {
        if (j < 0 || j >= num_vars())
          throw std::invalid_argument("row references unknown variable");
        if (!std::isfinite(a)) throw std::invalid_argument("non-finite coefficient");
      }
    }
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  double value = 0.0;
  std::vector<double> x;              // structural values
  std::vector<double> row_activity;   // a_i x
  std::vector<double> row_duals;      // y_i
  std::vector<double> reduced_costs;  // c - A^T y
  std::int64_t iterations = 0;
};

struct SimplexOptions {
  double pivot_tol = 1e-9;
  double primal_tol = 1e-7;
  double dual_tol = 1e-9;
  int refactor_every = 100;
  std::int64_t max_iterations = 0;  // 0: automatic
};

/// Weak-duality certificate recomputed from the original data.
struct DualCertificate {
  double dual_value = 0.0;
  double max_dual_infeasibility = 0.0;  // sign or bound violations of y, r
  double max_primal_infeasibility = 0.0;
  double gap = 0.0;                     // primal value - dual value
};

inline double row_lower(const LpRow& row) {
  return row.sense == RowSense::kLessEqual ? -kInf : row.rhs;
}
inline double row_upper(const LpRow& row) {
  return row.sense == RowSense::kGreaterEqual ? kInf : row.rhs;
}

/// Recomputes reduced costs from the row duals and evaluates the dual bound
/// sum_i y_i b_i + sum_j r_j l_j (with the bound each sign selects).
inline DualCertificate dual_certificate(const LpProblem& p, const LpSolution& s) {
  DualCertificate cert;
  const auto n = static_cast<std::size_t>(p.num_vars());
  std::vector<double> r(p.objective);
  double primal_inf = 0.0;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const LpRow& row = p.rows[i];
    double act = 0.0;
    for (const auto& [j, a] : row.coeffs) {
      r[static_cast<std::size_t>(j)] -= a * s.row_duals[i];
      act += a * s.x[static_cast<std::size_t>(j)];
    }
    primal_inf = std::max({primal_inf, row_lower(row) - act, act - row_upper(row)});
    const double y = s.row_duals[i];
    if (y > 0.0) {
      const double b = row_lower(row);
      if (std::isfinite(b)) cert.dual_value += y * b;
      else cert.max_dual_infeasibility = std::max(cert.max_dual_infeasibility, y);
    } else if (y < 0.0) {
      const double b = row_upper(row);
      if (std::isfinite(b)) cert.dual_value += y * b;
      else cert.max_dual_infeasibility = std::max(cert.max_dual_infeasibility, -y);
    }
  }
  double primal = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    primal += p.objective[j] * s.x[j];
    primal_inf = std::max({primal_inf, p.lower[j] - s.x[j], s.x[j] - p.upper[j]});
    if (r[j] > 0.0) {
      if (std::isfinite(p.lower[j])) cert.dual_value += r[j] * p.lower[j];
      else cert.max_dual_infeasibility = std::max(cert.max_dual_infeasibility, r[j]);
    } else if (r[j] < 0.0) {
      if (std::isfinite(p.upper[j])) cert.dual_value += r[j] * p.upper[j];
      else cert.max_dual_infeasibility = std::max(cert.max_dual_infeasibility, -r[j]);
    }
  }
  cert.max_primal_infeasibility = std::max(0.0, primal_inf);
  cert.gap = primal - cert.dual_value;
  return cert;
}

class BoundedSimplex {
 public:
  explicit BoundedSimplex(LpProblem problem, SimplexOptions opt = {})
      : p_(std::move(problem)), opt_(opt) {
    p_.validate();
    n_ = p_.num_vars();
    for (const LpRow& row : p_.rows) append_row_data(row);
  }

  const LpProblem& problem() const { return p_; }
  std::int64_t total_iterations() const { return total_iters_; }

  /// Appends a row. After a successful solve the current basis is kept and
  /// the new logical variable becomes basic.
  void add_row(LpRow row) {
    for (const auto& [j, a] : row.coeffs)
      if (j < 0 || j >= n_ || !std::isfinite(a))
        throw std::invalid_argument("invalid row added to LP");
    p_.rows.push_back(row);
    append_row_data(row);
    if (!initialized_) return;
    const std::size_t nn = static_cast<std::size_t>(n_);
    const int var = n_ + m_ - 1;
    std::vector<double> t(nn, 0.0);
    double value = 0.0;
    const std::size_t arow = static_cast<std::size_t>(m_ - 1) * nn;
    for (int j = 0; j < n_; ++j) {
      const double a = A_[arow + static_cast<std::size_t>(j)];
      if (a == 0.0) continue;
      value += a * val_[static_cast<std::size_t>(j)];
      const int ps = pos_[static_cast<std::size_t>(j)];
      if (ps >= 0) {
        const double* tr = &T_[static_cast<std::size_t>(ps) * nn];
        for (std::size_t c = 0; c < nn; ++c) t[c] += a * tr[c];
      } else {
        t[static_cast<std::size_t>(-ps - 1)] += a;
      }
    }
    T_.insert(T_.end(), t.begin(), t.end());
    basic_.push_back(var);
    pos_.push_back(m_ - 1);
    state_.push_back(State::kBasic);
    val_.push_back(value);
  }

  LpSolution solve() {
    const std::int64_t limit =
        opt_.max_iterations > 0 ? opt_.max_iterations
                                : 20 * static_cast<std::int64_t>(n_ + m_) + 5000;
    for (int attempt = 0; attempt < 3; ++attempt) {
      if (!initialized_ || attempt == 2) {
        slack_basis();
      } else if (attempt == 1 || since_refactor_ >= opt_.refactor_every) {
        if (!refactor()) slack_basis();
      }
      iter_ = 0;
      limit_ = limit;
      const LpStatus st = run();
      if (st == LpStatus::kNumericalFailure) continue;
      LpSolution sol = extract(st);
      if (st != LpStatus::kOptimal) return sol;
      const DualCertificate cert = dual_certificate(p_, sol);
      const double scale = 1.0 + std::abs(sol.value);
      if (cert.max_primal_infeasibility <= 10 * opt_.primal_tol &&
          cert.max_dual_infeasibility <= 1e-7 && std::abs(cert.gap) <= 1e-6 * scale)
        return sol;
    }
    LpSolution fail;
    fail.status = LpStatus::kNumericalFailure;
    fail.iterations = total_iters_;
    return fail;
  }

 private:
  enum class State : std::uint8_t { kBasic, kLower, kUpper, kFree };

  // ---- data -------------------------------------------------------------
  LpProblem p_;
  SimplexOptions opt_;
  int n_ = 0;  // structural variables, also the number of nonbasic columns
  int m_ = 0;  // rows
  std::vector<double> A_;   // dense row-major m x n copy of the rows
  std::vector<double> lb_, ub_, cost_;
  std::vector<double> T_;   // m x n dictionary
  std::vector<double> d_;   // reduced costs of nonbasic columns
  std::vector<int> basic_;  // row -> variable
  std::vector<int> nonbasic_;  // column -> variable
  std::vector<int> pos_;    // variable -> row (>= 0) or -(column + 1)
  std::vector<State> state_;
  std::vector<double> val_;
  bool initialized_ = false;
  bool bland_ = false;
  int degenerate_run_ = 0;
  int since_refactor_ = 0;
  std::int64_t iter_ = 0;
  std::int64_t limit_ = 0;
  std::int64_t total_iters_ = 0;

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(c);
  }
  static std::size_t u(int k) { return static_cast<std::size_t>(k); }

  void append_row_data(const LpRow& row) {
    const std::size_t base = A_.size();
    A_.resize(base + u(n_), 0.0);
    for (const auto& [j, a] : row.coeffs) A_[base + u(j)] += a;
    ++m_;
    ensure_bound_arrays();
    lb_.push_back(row_lower(row));
    ub_.push_back(row_upper(row));
    cost_.push_back(0.0);
  }

  void ensure_bound_arrays() {
    if (lb_.empty()) {
      lb_ = p_.lower;
      ub_ = p_.upper;
      cost_ = p_.objective;
    }
  }

  // Nonbasic resting place: the bound matching the cost sign when finite.
  void place_nonbasic(int k) {
    const double lo = lb_[u(k)], hi = ub_[u(k)];
    if (std::isfinite(lo) && std::isfinite(hi)) {
      const bool up = cost_[u(k)] < 0.0;
      state_[u(k)] = up ? State::kUpper : State::kLower;
      val_[u(k)] = up ? hi : lo;
    } else if (std::isfinite(lo)) {
      state_[u(k)] = State::kLower;
      val_[u(k)] = lo;
    } else if (std::isfinite(hi)) {
      state_[u(k)] = State::kUpper;
      val_[u(k)] = hi;
    } else {
      state_[u(k)] = State::kFree;
      val_[u(k)] = 0.0;
    }
  }

  void slack_basis() {
    ensure_bound_arrays();
    const int total = n_ + m_;
    state_.assign(u(total), State::kBasic);
    val_.assign(u(total), 0.0);
    pos_.assign(u(total), 0);
    basic_.resize(u(m_));
    nonbasic_.resize(u(n_));
    for (int j = 0; j < n_; ++j) {
      nonbasic_[u(j)] = j;
      pos_[u(j)] = -(j + 1);
      place_nonbasic(j);
    }
    for (int i = 0; i < m_; ++i) {
      basic_[u(i)] = n_ + i;
      pos_[u(n_ + i)] = i;
    }
    T_ = A_;
    recompute_basic_values();
    compute_reduced_costs();
    initialized_ = true;
    bland_ = false;
    degenerate_run_ = 0;
    since_refactor_ = 0;
  }

  void recompute_basic_values() {
    for (int r = 0; r < m_; ++r) {
      const double* tr = &T_[idx(r, 0)];
      double v = 0.0;
      for (int c = 0; c < n_; ++c) v += tr[c] * val_[u(nonbasic_[u(c)])];
      val_[u(basic_[u(r)])] = v;
    }
  }

  void compute_reduced_costs() {
    d_.assign(u(n_), 0.0);
    for (int c = 0; c < n_; ++c) d_[u(c)] = cost_[u(nonbasic_[u(c)])];
    for (int r = 0; r < m_; ++r) {
      const double cb = cost_[u(basic_[u(r)])];
      if (cb == 0.0) continue;
      const double* tr = &T_[idx(r, 0)];
      for (int c = 0; c < n_; ++c) d_[u(c)] += cb * tr[c];
    }
  }

  // Rebuilds T from the original rows for the current basis. The basic
  // structurals are determined by the rows whose logical is nonbasic.
  bool refactor() {
    std::vector<int> bs;  // basic structurals
    std::vector<int> rows;  // rows with nonbasic logical
    for (int j = 0; j < n_; ++j)
      if (state_[u(j)] == State::kBasic) bs.push_back(j);
    for (int i = 0; i < m_; ++i)
      if (state_[u(n_ + i)] != State::kBasic) rows.push_back(i);
    const std::size_t k = bs.size();
    if (rows.size() != k) return false;

    // M = A[rows, bs]; invert by Gauss-Jordan with partial pivoting.
    std::vector<double> M(k * k), inv(k * k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) M[a * k + b] = A_[idx(rows[a], bs[b])];
      inv[a * k + a] = 1.0;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < k; ++r)
        if (std::abs(M[r * k + c]) > std::abs(M[piv * k + c])) piv = r;
      if (std::abs(M[piv * k + c]) < 1e-12) return false;
      if (piv != c)
        for (std::size_t b = 0; b < k; ++b) {
          std::swap(M[piv * k + b], M[c * k + b]);
          std::swap(inv[piv * k + b], inv[c * k + b]);
        }
      const double dinv = 1.0 / M[c * k + c];
      for (std::size_t b = 0; b < k; ++b) {
        M[c * k + b] *= dinv;
        inv[c * k + b] *= dinv;
      }
      for (std::size_t r = 0; r < k; ++r) {
        if (r == c) continue;
        const double f = M[r * k + c];
        if (f == 0.0) continue;
        for (std::size_t b = 0; b < k; ++b) {
          M[r * k + b] -= f * M[c * k + b];
          inv[r * k + b] -= f * inv[c * k + b];
        }
      }
    }

    // x_bs = inv * (s_rows - A[rows, N] x_N), expressed over nonbasic columns.
    std::vector<double> xrow(k * u(n_), 0.0);  // rows of T for the basic structurals
    for (int c = 0; c < n_; ++c) {
      const int var = nonbasic_[u(c)];
      std::vector<double> rhs(k, 0.0);
      if (var >= n_) {
        const int row = var - n_;
        for (std::size_t a = 0; a < k; ++a)
          if (rows[a] == row) rhs[a] = 1.0;
      } else {
        for (std::size_t a = 0; a < k; ++a) rhs[a] = -A_[idx(rows[a], var)];
      }
      for (std::size_t p = 0; p < k; ++p) {
        double v = 0.0;
        for (std::size_t a = 0; a < k; ++a) v += inv[p * k + a] * rhs[a];
        xrow[p * u(n_) + u(c)] = v;
      }
    }
    // Logical rows: s_i = A[i, bs] x_bs + A[i, N] x_N.
    std::vector<double> structural_coef(u(n_), 0.0);
    for (int r = 0; r < m_; ++r) {
      const int var = basic_[u(r)];
      double* tr = &T_[idx(r, 0)];
      if (var < n_) {
        std::size_t p = 0;
        while (bs[p] != var) ++p;
        std::copy_n(&xrow[p * u(n_)], u(n_), tr);
        continue;
      }
      const int row = var - n_;
      std::fill_n(tr, u(n_), 0.0);
      for (int c = 0; c < n_; ++c) {
        const int nv = nonbasic_[u(c)];
        if (nv < n_) tr[c] = A_[idx(row, nv)];
      }
      for (std::size_t p = 0; p < k; ++p) {
        const double a = A_[idx(row, bs[p])];
        if (a == 0.0) continue;
        const double* xr = &xrow[p * u(n_)];
        for (int c = 0; c < n_; ++c) tr[c] += a * xr[c];
      }
    }
    recompute_basic_values();
    compute_reduced_costs();
    since_refactor_ = 0;
    return true;
  }

  bool can_increase(int k) const {
    const State s = state_[u(k)];
    return (s == State::kLower || s == State::kFree) && ub_[u(k)] > val_[u(k)];
  }
  bool can_decrease(int k) const {
    const State s = state_[u(k)];
    return (s == State::kUpper || s == State::kFree) && lb_[u(k)] < val_[u(k)];
  }

  double infeasibility(int k) const {
    const double v = val_[u(k)];
    if (v < lb_[u(k)] - opt_.primal_tol) return lb_[u(k)] - v;
    if (v > ub_[u(k)] + opt_.primal_tol) return v - ub_[u(k)];
    return 0.0;
  }

  bool primal_feasible() const {
    for (int r = 0; r < m_; ++r)
      if (infeasibility(basic_[u(r)]) > 0.0) return false;
    return true;
  }

  bool dual_feasible() const {
    for (int c = 0; c < n_; ++c) {
      const int k = nonbasic_[u(c)];
      const double dj = d_[u(c)];
      if (dj < -opt_.dual_tol && can_increase(k)) return false;
      if (dj > opt_.dual_tol && can_decrease(k)) return false;
    }
    return true;
  }

  void note_step(double step) {
    ++iter_;
    ++total_iters_;
    if (std::abs(step) <= 1e-12) {
      if (++degenerate_run_ > 3 * (m_ + n_)) bland_ = true;
    } else {
      degenerate_run_ = 0;
    }
  }

  // Exchanges basic row r with nonbasic column c.
  void pivot(int r, int c) {
    const std::size_t nn = u(n_);
    double* pr = &T_[idx(r, 0)];
    const double piv = pr[c];
    const double inv = 1.0 / piv;
    for (std::size_t k = 0; k < nn; ++k) pr[k] = -pr[k] * inv;
    pr[c] = inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* ti = &T_[idx(i, 0)];
      const double f = ti[c];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < nn; ++k) ti[k] += f * pr[k];
      ti[c] = f * inv;
    }
    const double f = d_[u(c)];
    if (f != 0.0) {
      for (std::size_t k = 0; k < nn; ++k) d_[k] += f * pr[k];
      d_[u(c)] = f * inv;
    }
    const int leaving = basic_[u(r)];
    const int entering = nonbasic_[u(c)];
    basic_[u(r)] = entering;
    nonbasic_[u(c)] = leaving;
    pos_[u(entering)] = r;
    pos_[u(leaving)] = -(c + 1);
    state_[u(entering)] = State::kBasic;
    ++since_refactor_;
  }

  // Moves nonbasic column c by delta and updates the basic values.
  void shift_nonbasic(int c, double delta) {
    if (delta == 0.0) return;
    val_[u(nonbasic_[u(c)])] += delta;
    for (int r = 0; r < m_; ++r) val_[u(basic_[u(r)])] += T_[idx(r, c)] * delta;
  }

  // Column choice for a primal iteration given pricing vector `price`.
  // Returns (column, direction) or (-1, 0).
  std::pair<int, int> price_primal(const std::vector<double>& price) const {
    int best = -1, dir = 0;
    double best_score = 0.0;
    for (int c = 0; c < n_; ++c) {
      const int k = nonbasic_[u(c)];
      const double dj = price[u(c)];
      int cand = 0;
      if (dj < -opt_.dual_tol && can_increase(k)) cand = 1;
      else if (dj > opt_.dual_tol && can_decrease(k)) cand = -1;
      if (cand == 0) continue;
      if (bland_) {
        if (best < 0 || k < nonbasic_[u(best)]) { best = c; dir = cand; }
      } else if (std::abs(dj) > best_score) {
        best_score = std::abs(dj);
        best = c;
        dir = cand;
      }
    }
    return {best, dir};
  }

  // Primal ratio test along column c in direction dir. In phase 1 an
  // infeasible basic variable limits the step only where it becomes feasible.
  // Returns (row, step, hits_upper); row -1 means a bound flip of the
  // entering variable, row -2 means unbounded.
  struct Ratio {
    int row = -2;
    double step = kInf;
    bool to_upper = false;
  };
  Ratio ratio_primal(int c, int dir, bool phase1) const {
    const int e = nonbasic_[u(c)];
    Ratio best;
    const double range = ub_[u(e)] - lb_[u(e)];
    if (std::isfinite(range)) {
      best.row = -1;
      best.step = range;
    }
    auto limit = [&](int r, double alpha, double& step, bool& up) -> bool {
      const int k = basic_[u(r)];
      const double v = val_[u(k)], lo = lb_[u(k)], hi = ub_[u(k)];
      const bool below = v < lo - opt_.primal_tol;
      const bool above = v > hi + opt_.primal_tol;
      if (alpha > 0.0) {
        if (phase1 && below) { step = (lo - v) / alpha; up = false; return true; }
        if (above || !std::isfinite(hi)) return false;
        step = (hi - v) / alpha;
        up = true;
        return true;
      }
      if (phase1 && above) { step = (v - hi) / -alpha; up = true; return true; }
      if (below || !std::isfinite(lo)) return false;
      step = (v - lo) / -alpha;
      up = false;
      return true;
    };
    // Harris pass 1: largest step with bounds relaxed by the tolerance.
    double relaxed = best.step;
    for (int r = 0; r < m_; ++r) {
      const double alpha = T_[idx(r, c)] * dir;
      if (std::abs(alpha) <= opt_.pivot_tol) continue;
      double step;
      bool up;
      if (!limit(r, alpha, step, up)) continue;
      relaxed = std::min(relaxed, std::max(step, 0.0) + opt_.primal_tol / std::abs(alpha));
    }
    // Pass 2: among rows within the relaxed step, the largest pivot.
    double best_alpha = 0.0;
    for (int r = 0; r < m_; ++r) {
      const double alpha = T_[idx(r, c)] * dir;
      if (std::abs(alpha) <= opt_.pivot_tol) continue;
      double step;
      bool up;
      if (!limit(r, alpha, step, up)) continue;
      step = std::max(step, 0.0);
      if (step > relaxed) continue;
      bool take;
      if (bland_) {
        take = best.row < 0 || step < best.step - 1e-12 ||
               (step <= best.step + 1e-12 && basic_[u(r)] < basic_[u(best.row)]);
      } else {
        take = std::abs(alpha) > best_alpha;
      }
      if (take) {
        best = {r, step, up};
        best_alpha = std::abs(alpha);
      }
    }
    return best;
  }

  // One primal iteration with pricing vector `price`; returns false at a
  // stationary point, sets `unbounded` when the ray is unbounded.
  bool primal_iteration(const std::vector<double>& price, bool phase1,
                        bool& unbounded) {
    const auto [c, dir] = price_primal(price);
    if (c < 0) return false;
    const Ratio rt = ratio_primal(c, dir, phase1);
    if (rt.row == -2) {
      unbounded = true;
      return false;
    }
    const int e = nonbasic_[u(c)];
    if (rt.row == -1) {
      shift_nonbasic(c, dir * rt.step);
      state_[u(e)] = dir > 0 ? State::kUpper : State::kLower;
      val_[u(e)] = dir > 0 ? ub_[u(e)] : lb_[u(e)];
      note_step(rt.step);
      return true;
    }
    shift_nonbasic(c, dir * rt.step);
    const int leaving = basic_[u(rt.row)];
    pivot(rt.row, c);
    state_[u(leaving)] = rt.to_upper ? State::kUpper : State::kLower;
    val_[u(leaving)] = rt.to_upper ? ub_[u(leaving)] : lb_[u(leaving)];
    note_step(rt.step);
    return true;
  }

  LpStatus primal_phase1() {
    std::vector<double> price(u(n_));
    bland_ = false;
    degenerate_run_ = 0;
    while (iter_ < limit_) {
      std::fill(price.begin(), price.end(), 0.0);
      bool any = false;
      for (int r = 0; r < m_; ++r) {
        const int k = basic_[u(r)];
        double w = 0.0;
        if (val_[u(k)] < lb_[u(k)] - opt_.primal_tol) w = -1.0;
        else if (val_[u(k)] > ub_[u(k)] + opt_.primal_tol) w = 1.0;
        if (w == 0.0) continue;
        any = true;
        const double* tr = &T_[idx(r, 0)];
        for (int c = 0; c < n_; ++c) price[u(c)] += w * tr[c];
      }
      if (!any) return LpStatus::kOptimal;
      bool unbounded = false;
      if (!primal_iteration(price, true, unbounded)) return LpStatus::kInfeasible;
      if (since_refactor_ >= opt_.refactor_every * 5 && !refactor())
        return LpStatus::kNumericalFailure;
    }
    return LpStatus::kNumericalFailure;
  }

  LpStatus primal_phase2() {
    bland_ = false;
    degenerate_run_ = 0;
    while (iter_ < limit_) {
      bool unbounded = false;
      if (!primal_iteration(d_, false, unbounded))
        return unbounded ? LpStatus::kUnbounded : LpStatus::kOptimal;
      if (!primal_feasible()) return LpStatus::kNumericalFailure;
    }
    return LpStatus::kNumericalFailure;
  }

  LpStatus dual_simplex() {
    bland_ = false;
    degenerate_run_ = 0;
    while (iter_ < limit_) {
      int r = -1;
      double worst = 0.0;
      for (int i = 0; i < m_; ++i) {
        const int k = basic_[u(i)];
        const double inf = infeasibility(k);
        if (inf <= 0.0) continue;
        if (bland_ ? (r < 0 || k < basic_[u(r)]) : inf > worst) {
          worst = inf;
          r = i;
        }
      }
      if (r < 0) return LpStatus::kOptimal;
      const int leaving = basic_[u(r)];
      const bool raise = val_[u(leaving)] < lb_[u(leaving)];
      const double target = raise ? lb_[u(leaving)] : ub_[u(leaving)];
      const double* tr = &T_[idx(r, 0)];

      // Harris-style dual ratio test.
      double relaxed = kInf;
      for (int c = 0; c < n_; ++c) {
        const int k = nonbasic_[u(c)];
        const double a = tr[c];
        if (std::abs(a) <= opt_.pivot_tol) continue;
        const double s = raise ? a : -a;  // leaving moves the right way when x_c moves by sign(s)
        const bool ok = (s > 0.0 && can_increase(k)) || (s < 0.0 && can_decrease(k));
        if (!ok) continue;
        relaxed = std::min(relaxed, (std::abs(d_[u(c)]) + opt_.dual_tol) / std::abs(a));
      }
      if (!std::isfinite(relaxed)) return LpStatus::kInfeasible;
      int enter = -1;
      double best_a = 0.0, best_ratio = kInf;
      for (int c = 0; c < n_; ++c) {
        const int k = nonbasic_[u(c)];
        const double a = tr[c];
        if (std::abs(a) <= opt_.pivot_tol) continue;
        const double s = raise ? a : -a;
        const bool ok = (s > 0.0 && can_increase(k)) || (s < 0.0 && can_decrease(k));
        if (!ok) continue;
        const double ratio = std::abs(d_[u(c)]) / std::abs(a);
        if (ratio > relaxed) continue;
        bool take;
        if (bland_) {
          take = enter < 0 || ratio < best_ratio - 1e-12 ||
                 (ratio <= best_ratio + 1e-12 && k < nonbasic_[u(enter)]);
        } else {
          take = std::abs(a) > best_a;
        }
        if (take) {
          enter = c;
          best_a = std::abs(a);
          best_ratio = ratio;
        }
      }
      const double delta = (target - val_[u(leaving)]) / tr[enter];
      shift_nonbasic(enter, delta);
      pivot(r, enter);
      state_[u(leaving)] = raise ? State::kLower : State::kUpper;
      val_[u(leaving)] = target;
      note_step(best_ratio);
      if (since_refactor_ >= opt_.refactor_every * 5 && !refactor())
        return LpStatus::kNumericalFailure;
    }
    return LpStatus::kNumericalFailure;
  }

  LpStatus run() {
    compute_reduced_costs();
    if (!primal_feasible() && dual_feasible()) {
      const LpStatus st = dual_simplex();
      if (st == LpStatus::kOptimal && dual_feasible()) return LpStatus::kOptimal;
    }
    if (!primal_feasible()) {
      const LpStatus st = primal_phase1();
      if (st != LpStatus::kOptimal) return st;
      compute_reduced_costs();
    }
    return primal_phase2();
  }

  LpSolution extract(LpStatus st) const {
    LpSolution sol;
    sol.status = st;
    sol.iterations = total_iters_;
    sol.x.assign(val_.begin(), val_.begin() + n_);
    sol.row_activity.assign(u(m_), 0.0);
    for (int i = 0; i < m_; ++i) {
      double a = 0.0;
      for (int j = 0; j < n_; ++j) a += A_[idx(i, j)] * sol.x[u(j)];
      sol.row_activity[u(i)] = a;
    }
    sol.row_duals.assign(u(m_), 0.0);
    sol.reduced_costs.assign(u(n_), 0.0);
    for (int c = 0; c < n_; ++c) {
      const int k = nonbasic_[u(c)];
      if (k >= n_) sol.row_duals[u(k - n_)] = d_[u(c)];
      else sol.reduced_costs[u(k)] = d_[u(c)];
    }
    double v = 0.0;
    for (int j = 0; j < n_; ++j) v += cost_[u(j)] * sol.x[u(j)];
    sol.value = st == LpStatus::kUnbounded ? -kInf : v;
    return sol;
  }
};

/// One-shot cold solve.
inline LpSolution solve_lp(const LpProblem& problem, SimplexOptions opt = {}) {
  BoundedSimplex solver(problem, opt);
  return solver.solve();
}

}  // namespace bilincover
