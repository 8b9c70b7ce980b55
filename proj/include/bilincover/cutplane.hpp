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

// Cutting-plane driver: solve an LP relaxation, separate every bilinear
// covering row at the LP point, add at most one cut per row, repeat until no
// violated cut remains or the LP budget is spent.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bilincover/model.hpp"
#include "bilincover/separation.hpp"
#include "bilincover/simplex.hpp"

namespace bilincover {

enum class CutFamily { kBoundedHull, kUnboundedHull };

inline const char* to_string(CutFamily f) {
  return f == CutFamily::kBoundedHull ? "bounded" : "unbounded";
}

/// One covering row sum_i x_{x_vars[i]} y_{y_vars[i]} >= inst.r of an LP.
struct BilinearRow {
  Instance inst;
  std::vector<int> x_vars;
  std::vector<int> y_vars;
};

struct RelaxationModel {
  LpProblem lp;
  std::vector<BilinearRow> rows;
};

/// Root LP of the trim-loss model: variables x_ij (pattern i, final j) at
/// index i * |F| + j followed by y_i. Rows: sum_i x_ij >= 1 per final,
/// sum_j l_j x_ij <= L per pattern; 0 <= x_ij <= floor(L / l_j), y >= 0;
/// objective sum_i y_i.
inline RelaxationModel build_root_relaxation(const TrimLossInstance& t) {
  const TrimLossInstance tl = validate_trimloss(t);
  const int nf = tl.n_finals();
  const int np = tl.n_patterns;
  RelaxationModel m;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nf; ++j) m.lp.add_variable(0.0, 0.0, tl.implied_bound(j));
  for (int i = 0; i < np; ++i) m.lp.add_variable(1.0);
  auto xvar = [nf](int i, int j) { return i * nf + j; };
  const int y0 = np * nf;

  for (int j = 0; j < nf; ++j) {
    LpRow row;
    for (int i = 0; i < np; ++i) row.coeffs.emplace_back(xvar(i, j), 1.0);
    row.sense = RowSense::kGreaterEqual;
    row.rhs = 1.0;
    m.lp.add_row(std::move(row));
  }
  for (int i = 0; i < np; ++i) {
    LpRow row;
    for (int j = 0; j < nf; ++j)
      row.coeffs.emplace_back(xvar(i, j), tl.lengths[static_cast<std::size_t>(j)]);
    row.sense = RowSense::kLessEqual;
    row.rhs = tl.stock_length;
    m.lp.add_row(std::move(row));
  }
  for (int j = 0; j < nf; ++j) {
    BilinearRow br;
    br.inst.n = np;
    br.inst.r = tl.demands[static_cast<std::size_t>(j)];
    br.inst.u = std::vector<int>(static_cast<std::size_t>(np), tl.implied_bound(j));
    for (int i = 0; i < np; ++i) {
      br.x_vars.push_back(xvar(i, j));
      br.y_vars.push_back(y0 + i);
    }
    m.rows.push_back(std::move(br));
  }
  return m;
}

/// Root LP of a single covering row: sum_i x_i >= 1, 0 <= x <= u (when
/// bounded), y >= 0, objective c x + d y. Variables are x_1..x_n, y_1..y_n.
inline RelaxationModel build_root_relaxation(const Instance& instance,
                                             const LinearObjective& obj) {
  const Instance inst = validate_instance(instance);
  check_objective(obj, inst);
  for (int i = 0; i < inst.n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (obj.d[s] < 0.0)
      throw InvalidInput("objective has a negative y coefficient; the relaxation is unbounded");
    if (!inst.bounded() && obj.c[s] < 0.0)
      throw InvalidInput("objective has a negative x coefficient without a bound");
  }
  RelaxationModel m;
  for (int i = 0; i < inst.n; ++i)
    m.lp.add_variable(obj.c[static_cast<std::size_t>(i)], 0.0,
                      inst.bounded() ? inst.bound(i) : kInf);
  for (int i = 0; i < inst.n; ++i) m.lp.add_variable(obj.d[static_cast<std::size_t>(i)]);
  LpRow cover;
  for (int i = 0; i < inst.n; ++i) cover.coeffs.emplace_back(i, 1.0);
  cover.rhs = 1.0;
  m.lp.add_row(std::move(cover));
  BilinearRow br;
  br.inst = inst;
  for (int i = 0; i < inst.n; ++i) {
    br.x_vars.push_back(i);
    br.y_vars.push_back(inst.n + i);
  }
  m.rows.push_back(std::move(br));
  return m;
}

struct IterationRecord {
  int iter = 0;
  double lb = 0.0;
  int cuts_added = 0;
  int cuts_total = 0;
  double ms = 0.0;

  bool operator==(const IterationRecord&) const = default;
};

struct IterationLog {
  std::vector<IterationRecord> records;
  bool terminated = false;  // stopped because no violated cut was found
  double final_lower_bound = 0.0;

  int lp_solves() const { return static_cast<int>(records.size()); }
};

struct AddedCut {
  int iteration = 0;
  int row = 0;  // index into RelaxationModel::rows
  Cut cut;
};

struct CutplaneOptions {
  int max_iters = 800;
  int gamma = 1;
  double eps_cut = 1e-7;
};

struct CutplaneResult {
  IterationLog log;
  std::vector<AddedCut> cuts;
  LpSolution final_lp;
};

class CutplaneError : public std::runtime_error {
 public:
  CutplaneError(const std::string& what, int iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

namespace detail {

inline double snap(double v, double lo, double hi) {
  if (std::abs(v) < 1e-11) v = 0.0;
  return std::clamp(v, lo, hi);
}

}  // namespace detail

inline CutplaneResult run_cutting_plane(const RelaxationModel& model,
                                        CutFamily family,
                                        const CutplaneOptions& opt = {}) {
  if (opt.max_iters < 1) throw InvalidInput("max_iters must be positive");
  if (family == CutFamily::kBoundedHull)
    for (const BilinearRow& row : model.rows)
      if (!row.inst.bounded())
        throw InvalidInput("bounded-hull cuts need bounds on every integer variable");

  using Clock = std::chrono::steady_clock;
  CutplaneResult res;
  BoundedSimplex solver(model.lp);
  std::set<std::pair<std::size_t, std::vector<std::int64_t>>> seen;
  int total = 0;

  for (int iter = 1; iter <= opt.max_iters; ++iter) {
    const auto start = Clock::now();
    LpSolution sol = solver.solve();
    if (sol.status != LpStatus::kOptimal)
      throw CutplaneError(std::string("LP solve failed at iteration ") +
                              std::to_string(iter) + ": " + to_string(sol.status),
                          iter);

    int added = 0;
    for (std::size_t k = 0; k < model.rows.size(); ++k) {
      const BilinearRow& row = model.rows[k];
      const auto n = static_cast<std::size_t>(row.inst.n);
      Point p{std::vector<double>(n), std::vector<double>(n)};
      for (std::size_t i = 0; i < n; ++i) {
        const double hi = row.inst.bounded() ? row.inst.bound(static_cast<int>(i)) : kInf;
        p.x[i] = detail::snap(sol.x[static_cast<std::size_t>(row.x_vars[i])], 0.0, hi);
        p.y[i] = detail::snap(sol.x[static_cast<std::size_t>(row.y_vars[i])], 0.0, kInf);
      }
      const SeparationResult sep =
          family == CutFamily::kBoundedHull
              ? separate_bounded(p, row.inst)
              : separate_unbounded(p, row.inst, opt.gamma);
      if (!sep.violated() || sep.violation <= opt.eps_cut) continue;
      if (!seen.emplace(k, sep.cut->w).second) continue;
      LpRow lp_row;
      for (std::size_t i = 0; i < n; ++i) {
        if (sep.cut->alpha[i] != 0.0) lp_row.coeffs.emplace_back(row.x_vars[i], sep.cut->alpha[i]);
        if (sep.cut->beta[i] != 0.0) lp_row.coeffs.emplace_back(row.y_vars[i], sep.cut->beta[i]);
      }
      lp_row.sense = RowSense::kGreaterEqual;
      lp_row.rhs = 1.0;
      solver.add_row(std::move(lp_row));
      res.cuts.push_back({iter, static_cast<int>(k), *sep.cut});
      ++added;
    }
    total += added;
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    res.log.records.push_back({iter, sol.value, added, total, ms});
    res.log.final_lower_bound = sol.value;
    res.final_lp = std::move(sol);
    if (added == 0) {
      res.log.terminated = true;
      break;
    }
  }
  return res;
}

inline CutplaneResult run_cutting_plane(const TrimLossInstance& t, CutFamily family,
                                        const CutplaneOptions& opt = {}) {
  return run_cutting_plane(build_root_relaxation(t), family, opt);
}

inline CutplaneResult run_cutting_plane(const Instance& inst,
                                        const LinearObjective& obj,
                                        CutFamily family,
                                        const CutplaneOptions& opt = {}) {
  return run_cutting_plane(build_root_relaxation(inst, obj), family, opt);
}

}  // namespace bilincover
