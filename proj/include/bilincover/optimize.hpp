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

// Exact minimization of c^T x + d^T y over S (unbounded x) and over S^U
// (bounded x). Both reduce to checking extreme points of a single active
// column, so no LP is involved.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bilincover/model.hpp"

namespace bilincover {

enum class OptStatus { kOptimal, kUnbounded, kInfimumNotAttained };

inline const char* to_string(OptStatus s) {
  switch (s) {
    case OptStatus::kOptimal:
      return "optimal";
    case OptStatus::kUnbounded:
      return "unbounded";
    case OptStatus::kInfimumNotAttained:
      return "infimum_not_attained";
  }
  return "unknown";
}

struct OptResult {
  OptStatus status = OptStatus::kOptimal;
  double value = 0.0;
  std::optional<Point> solution;
};

struct ColumnOpt {
  std::int64_t x = 1;
  double y = 0.0;
  double value = 0.0;
};

namespace detail {

// argmin of c x + d r / x over integers x in [1, cap], c, d > 0. The
// continuous minimizer is sqrt(r d / c); the integer one is one of its two
// integer neighbours (floor wins ties).
inline ColumnOpt best_column(double c, double d, double r, std::int64_t cap) {
  const double eta = std::sqrt(r * d / c);
  auto make = [&](std::int64_t x) {
    const double y = r / static_cast<double>(x);
    return ColumnOpt{x, y, c * static_cast<double>(x) + d * y};
  };
  if (!(eta > 1.0)) return make(1);
  if (!(eta < static_cast<double>(cap))) return make(cap);
  const auto lo = static_cast<std::int64_t>(std::floor(eta));
  const ColumnOpt a = make(lo);
  if (static_cast<double>(lo) == eta) return a;
  const ColumnOpt b = make(lo + 1);
  return a.value <= b.value ? a : b;
}

inline constexpr std::int64_t kNoCap = std::int64_t{1} << 52;

inline Point single_column_point(int n, int t, double x, double y) {
  Point p{std::vector<double>(static_cast<std::size_t>(n), 0.0),
          std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  p.x[static_cast<std::size_t>(t)] = x;
  p.y[static_cast<std::size_t>(t)] = y;
  return p;
}

}  // namespace detail

/// min c x + d y over {x in N, y >= 0, xy >= r} for c, d > 0.
inline ColumnOpt optimize_column_S(double c, double d, double r) {
  if (!(c > 0.0) || !(d > 0.0))
    throw InvalidInput("column optimization needs c > 0 and d > 0");
  if (!(r > 0.0)) throw InvalidInput("r must be positive");
  return detail::best_column(c, d, r, detail::kNoCap);
}

/// Minimizes a linear objective over S; any bounds on the instance are
/// ignored. Weighted rows are handled through the delta transform.
inline OptResult optimize_over_S(const LinearObjective& objective,
                                 const Instance& inst) {
  check_objective(objective, inst);
  const auto [unit, tr] = apply_delta_transform(inst);
  const LinearObjective obj = tr.to_unit(objective);
  const int n = inst.n;
  const double r = inst.r;
  OptResult res;

  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (obj.c[s] < 0.0 || obj.d[s] < 0.0) {
      res.status = OptStatus::kUnbounded;
      res.value = -std::numeric_limits<double>::infinity();
      return res;
    }
  }

  // Some c_t = 0: a y-free column reaches 0; otherwise y_t -> 0 only in the
  // limit.
  int zero_c = -1;
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (obj.c[s] == 0.0) {
      if (obj.d[s] == 0.0) {
        res.value = 0.0;
        res.solution = tr.from_unit(detail::single_column_point(n, i, 1.0, r));
        return res;
      }
      if (zero_c < 0) zero_c = i;
    }
  }
  if (zero_c >= 0) {
    res.status = OptStatus::kInfimumNotAttained;
    res.value = 0.0;
    return res;
  }

  int best = -1;
  ColumnOpt best_col;
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const ColumnOpt col = obj.d[s] == 0.0 ? ColumnOpt{1, r, obj.c[s]}
                                          : optimize_column_S(obj.c[s], obj.d[s], r);
    if (best < 0 || col.value < best_col.value) {
      best = i;
      best_col = col;
    }
  }
  res.value = best_col.value;
  res.solution = tr.from_unit(detail::single_column_point(
      n, best, static_cast<double>(best_col.x), best_col.y));
  return res;
}

/// Point of S with objective at most `eps` for the kInfimumNotAttained case:
/// L(t, ceil(d_t r / eps), r / x_t) on the first column with c_t = 0.
inline std::optional<Point> epsilon_witness_S(const LinearObjective& objective,
                                              const Instance& inst, double eps) {
  if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
  check_objective(objective, inst);
  const auto [unit, tr] = apply_delta_transform(inst);
  const LinearObjective obj = tr.to_unit(objective);
  for (int i = 0; i < inst.n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (obj.c[s] == 0.0 && obj.d[s] >= 0.0) {
      const double x = std::max(1.0, std::ceil(obj.d[s] * inst.r / eps));
      return tr.from_unit(detail::single_column_point(inst.n, i, x, inst.r / x));
    }
  }
  return std::nullopt;
}

struct ColumnSubproblem {
  Point point;
  double value = 0.0;
};

/// Best extreme point of conv(S^U) whose active column is i (d >= 0). The
/// inactive columns sit at u_j when c_j <= 0 and at 0 otherwise.
inline ColumnSubproblem optimize_Pi(const LinearObjective& obj,
                                    const Instance& inst, int i) {
  if (!inst.bounded()) throw InvalidInput("optimize_Pi requires bounds u");
  check_objective(obj, inst);
  const auto n = static_cast<std::size_t>(inst.n);
  for (double d : obj.d)
    if (d < 0.0) throw InvalidInput("optimize_Pi requires d >= 0");
  const auto si = static_cast<std::size_t>(i);

  Point p{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  double value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == si) continue;
    if (obj.c[j] <= 0.0) {
      p.x[j] = (*inst.u)[j];
      value += obj.c[j] * p.x[j];
    }
  }
  const int ui = inst.bound(i);
  ColumnOpt col;
  if (obj.c[si] <= 0.0) {
    col = {ui, inst.r / ui, 0.0};
  } else if (obj.d[si] == 0.0) {
    col = {1, inst.r, 0.0};
  } else {
    col = detail::best_column(obj.c[si], obj.d[si], inst.r, ui);
  }
  p.x[si] = static_cast<double>(col.x);
  p.y[si] = col.y;
  value += obj.c[si] * p.x[si] + obj.d[si] * p.y[si];
  return {std::move(p), value};
}

/// Minimizes a linear objective over S^U. Ties between active columns go to
/// the smallest index.
inline OptResult optimize_over_SU(const LinearObjective& objective,
                                  const Instance& inst) {
  if (!inst.bounded()) throw InvalidInput("optimize_over_SU requires bounds u");
  check_objective(objective, inst);
  const auto [unit, tr] = apply_delta_transform(inst);
  const LinearObjective obj = tr.to_unit(objective);
  const auto n = static_cast<std::size_t>(inst.n);
  OptResult res;

  bool c_nonpos = true;
  bool d_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (obj.d[i] < 0.0) {
      res.status = OptStatus::kUnbounded;
      res.value = -std::numeric_limits<double>::infinity();
      return res;
    }
    c_nonpos = c_nonpos && obj.c[i] <= 0.0;
    d_zero = d_zero && obj.d[i] == 0.0;
  }

  if (c_nonpos && d_zero) {
    Point p{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) p.x[i] = (*unit.u)[i];
    p.y[0] = unit.r / p.x[0];
    res.value = obj.evaluate(p);
    res.solution = tr.from_unit(std::move(p));
    return res;
  }

  std::optional<ColumnSubproblem> best;
  for (int i = 0; i < unit.n; ++i) {
    ColumnSubproblem sub = optimize_Pi(obj, unit, i);
    if (!best || sub.value < best->value) best = std::move(sub);
  }
  res.value = best->value;
  res.solution = tr.from_unit(std::move(best->point));
  return res;
}

}  // namespace bilincover
