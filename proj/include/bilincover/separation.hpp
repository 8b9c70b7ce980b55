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

// Facet coefficients of the bilinear covering hulls and the linear-time
// separation routines for conv(S^U) (bounded x) and conv(S) (unbounded x).
//
// A facet of conv(S^L) picks one term per column i of the matrix
//
//   l^k(x_i, y_i) = a_k x_i + b_k y_i,   k = 1..u_i,
//   l^{u_i+1}(x_i, y_i) = y_i u_i / r,
//
// and requires the sum of the picked terms to be at least one. Separation
// minimizes every column independently at the query point.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bilincover/model.hpp"

namespace bilincover {

struct FacetCoeff {
  std::int64_t k = 1;
  double a = 1.0;
  double b = 0.0;
};

/// a_k = 1/(2k-1), b_k = k(k-1)/(r(2k-1)). The line a_k x + b_k y = 1 joins
/// (k-1, r/(k-1)) and (k, r/k) on the curve xy = r.
inline FacetCoeff facet_coeffs(std::int64_t k, double r) {
  if (k < 1) throw InvalidInput("facet index k must be at least 1");
  if (!(r > 0.0)) throw InvalidInput("r must be positive");
  const double kk = static_cast<double>(k);
  const double denom = 2.0 * kk - 1.0;
  return {k, 1.0 / denom, kk * (kk - 1.0) / (r * denom)};
}

/// Value of the k-th facet term at (x, y): x/(2k-1) + y k(k-1)/(r(2k-1)).
inline double facet_term(double x, double y, double r, std::int64_t k) {
  const double kk = static_cast<double>(k);
  const double denom = 2.0 * kk - 1.0;
  return x / denom + y * kk * (kk - 1.0) / (r * denom);
}

/// Coefficients of a cut sum_i (alpha_i x_i + beta_i y_i) >= 1.
struct Cut {
  std::vector<double> alpha;
  std::vector<double> beta;
  // Generating index per column; u_i + 1 marks the bound term y_i u_i / r.
  std::vector<std::int64_t> w;

  int size() const { return static_cast<int>(alpha.size()); }

  double evaluate(const Point& p) const {
    double v = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      v += alpha[i] * p.x[i] + beta[i] * p.y[i];
    return v;
  }

  /// Human-readable form such as "0.25*y1 + 0.3*y2 >= 1".
  std::string to_string() const {
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    auto term = [&](double coef, const char* var, std::size_t i) {
      if (coef == 0.0) return;
      if (!first) os << " + ";
      first = false;
      if (coef != 1.0) os << coef << '*';
      os << var << (i + 1);
    };
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      term(alpha[i], "x", i);
      term(beta[i], "y", i);
    }
    if (first) os << '0';
    os << " >= 1";
    return os.str();
  }

  bool operator==(const Cut&) const = default;
};

/// Builds the cut of conv(S^L) selected by an index vector (k_i), with
/// k_i = u_i + 1 selecting the bound term.
inline Cut cut_from_indices(const std::vector<std::int64_t>& w,
                            const Instance& inst) {
  Cut cut;
  cut.w = w;
  for (int i = 0; i < inst.n; ++i) {
    const std::int64_t k = w[static_cast<std::size_t>(i)];
    if (inst.bounded() && k == inst.bound(i) + 1) {
      cut.alpha.push_back(0.0);
      cut.beta.push_back(1.0 / inst.implied_y_bound(i));
    } else {
      if (k < 1 || (inst.bounded() && k > inst.bound(i)))
        throw InvalidInput("column index out of range");
      const FacetCoeff fc = facet_coeffs(k, inst.r);
      cut.alpha.push_back(fc.a);
      cut.beta.push_back(fc.b);
    }
  }
  return cut;
}

/// Entry of column i of the facet matrix at point p. For a bounded instance
/// k = u_i + 1 is the bound term.
inline double column_term(int i, std::int64_t k, const Point& p,
                          const Instance& inst) {
  if (i < 0 || i >= inst.n) throw InvalidInput("column index out of range");
  const auto s = static_cast<std::size_t>(i);
  if (inst.bounded()) {
    if (k < 1 || k > inst.bound(i) + 1)
      throw InvalidInput("term index out of range for column " +
                         std::to_string(i));
    if (k == inst.bound(i) + 1) return p.y[s] / inst.implied_y_bound(i);
  } else if (k < 1) {
    throw InvalidInput("term index must be positive");
  }
  return facet_term(p.x[s], p.y[s], inst.r, k);
}

struct ColumnMin {
  std::int64_t w_hat = 1;
  double xi = 0.0;
  // Unbounded columns with x > 0 and y = 0: the infimum 0 is approached as
  // w grows; the index is fixed later from the other columns.
  bool at_infinity = false;
};

namespace detail {

// Integer minimizer of f(w) = facet_term(x, y, r, w) over 1 <= w <= cap for
// x, y > 0. f is strictly convex when 4xr > y with stationary point
// 1/2 + sqrt(4xr/y - 1)/2, and strictly increasing on w >= 1 otherwise.
inline std::int64_t best_facet_index(double x, double y, double r,
                                     std::int64_t cap) {
  if (!(4.0 * x * r > y)) return 1;
  const double wbar = 0.5 + std::sqrt(4.0 * x * r / y - 1.0) / 2.0;
  if (!(wbar > 1.0)) return 1;
  if (!(wbar < static_cast<double>(cap))) return cap;
  const auto p = static_cast<std::int64_t>(std::floor(wbar));
  return facet_term(x, y, r, p) <= facet_term(x, y, r, p + 1) ? p : p + 1;
}

inline constexpr std::int64_t kIndexCap = std::int64_t{1} << 52;

}  // namespace detail

/// Minimum of column i of the bounded facet matrix at (x, y).
inline ColumnMin min_column_bounded(double x, double y, double r, int u) {
  if (x < 0.0 || y < 0.0) throw InvalidInput("column point must be non-negative");
  if (u < 1) throw InvalidInput("bound must be at least 1");
  if (y == 0.0) return {u + 1, 0.0, false};
  if (x == 0.0) return {1, 0.0, false};
  const std::int64_t q = detail::best_facet_index(x, y, r, u);
  const double fq = facet_term(x, y, r, q);
  const double bound_term = y * u / r;
  if (fq <= bound_term) return {q, fq, false};
  return {u + 1, bound_term, false};
}

/// Minimum (or infimum) of column i of the unbounded facet matrix.
inline ColumnMin min_column_unbounded(double x, double y, double r) {
  if (x < 0.0 || y < 0.0) throw InvalidInput("column point must be non-negative");
  if (x == 0.0) return {1, 0.0, false};
  if (y == 0.0) return {0, 0.0, true};
  const std::int64_t q = detail::best_facet_index(x, y, r, detail::kIndexCap);
  return {q, facet_term(x, y, r, q), false};
}

enum class SeparationStatus { kFeasible, kViolated, kBoundViolation };

struct SeparationResult {
  SeparationStatus status = SeparationStatus::kFeasible;
  std::optional<Cut> cut;
  double violation = 0.0;    // 1 - cut value at the point, when violated
  double column_sum = 0.0;   // sum of the column minima
  int bound_index = -1;      // offending index for kBoundViolation

  bool violated() const { return status == SeparationStatus::kViolated; }
};

namespace detail {

inline void check_nonnegative(const Point& p) {
  for (std::size_t i = 0; i < p.x.size(); ++i)
    if (p.x[i] < 0.0 || p.y[i] < 0.0)
      throw InvalidInput("point must be non-negative");
}

inline SeparationResult pull_back(SeparationResult res, const Instance& inst) {
  if (res.cut && !inst.unit_weights()) {
    const DeltaTransform tr(inst.delta);
    res.cut->beta = tr.pull_back_beta(std::move(res.cut->beta));
  }
  return res;
}

}  // namespace detail

/// Separation over conv(S^U). Returns kBoundViolation when some x_i > u_i,
/// otherwise the most violated facet of conv(S^L) when the column minima sum
/// to less than 1 - tol.
inline SeparationResult separate_bounded(const Point& point, const Instance& inst,
                                         double tol = kFeasTol) {
  if (!inst.bounded()) throw InvalidInput("bounded separation requires u");
  check_point(point, inst);
  detail::check_nonnegative(point);
  const Point p = inst.unit_weights() ? point : DeltaTransform(inst.delta).to_unit(point);

  SeparationResult res;
  for (int i = 0; i < inst.n; ++i) {
    if (p.x[static_cast<std::size_t>(i)] > inst.bound(i) + tol) {
      res.status = SeparationStatus::kBoundViolation;
      res.bound_index = i;
      res.violation = p.x[static_cast<std::size_t>(i)] - inst.bound(i);
      return res;
    }
  }

  std::vector<std::int64_t> w(static_cast<std::size_t>(inst.n));
  double sum = 0.0;
  for (int i = 0; i < inst.n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const ColumnMin cm = min_column_bounded(p.x[s], p.y[s], inst.r, inst.bound(i));
    w[s] = cm.w_hat;
    sum += cm.xi;
  }
  res.column_sum = sum;
  if (sum >= 1.0 - tol) return res;

  res.status = SeparationStatus::kViolated;
  res.cut = cut_from_indices(w, inst);
  res.violation = 1.0 - res.cut->evaluate(p);
  return detail::pull_back(std::move(res), inst);
}

/// Separation over conv(S); bounds on x, if present, are ignored. Columns
/// with x_i > 0 and y_i = 0 receive the common index
/// t = floor((1 - xi + v) / (2(1 - xi))) + gamma.
inline SeparationResult separate_unbounded(const Point& point,
                                           const Instance& inst, int gamma = 1,
                                           double tol = kFeasTol) {
  if (gamma < 1) throw InvalidInput("gamma must be a positive integer");
  check_point(point, inst);
  detail::check_nonnegative(point);
  const Point p = inst.unit_weights() ? point : DeltaTransform(inst.delta).to_unit(point);

  std::vector<std::int64_t> w(static_cast<std::size_t>(inst.n));
  std::vector<bool> tail(static_cast<std::size_t>(inst.n), false);
  double xi = 0.0;
  double v = 0.0;
  for (int i = 0; i < inst.n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const ColumnMin cm = min_column_unbounded(p.x[s], p.y[s], inst.r);
    w[s] = cm.w_hat;
    xi += cm.xi;
    if (cm.at_infinity) {
      tail[s] = true;
      v += p.x[s];
    }
  }

  SeparationResult res;
  res.column_sum = xi;
  if (xi >= 1.0 - tol) return res;

  const double slack = 1.0 - xi;
  auto t = static_cast<std::int64_t>(std::floor((slack + v) / (2.0 * slack))) + gamma;
  Instance unbounded = inst;
  unbounded.u.reset();
  auto assemble = [&] {
    for (std::size_t s = 0; s < w.size(); ++s)
      if (tail[s]) w[s] = t;
    return cut_from_indices(w, unbounded);
  };
  Cut cut = assemble();
  // The least t makes the cut value strictly below one in exact arithmetic;
  // keep a visible margin against rounding.
  while (cut.evaluate(p) >= 1.0 - tol / 2 && v > 0.0 && t < detail::kIndexCap) {
    t *= 2;
    cut = assemble();
  }
  res.status = SeparationStatus::kViolated;
  res.violation = 1.0 - cut.evaluate(p);
  res.cut = std::move(cut);
  return detail::pull_back(std::move(res), inst);
}

}  // namespace bilincover
