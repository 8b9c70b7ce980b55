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

// Domain types for a single mixed-integer bilinear covering row
//
//   sum_i delta_i * x_i * y_i >= r,   x in Z^n_+,  y in R^n_+,  optionally x <= u,
//
// together with validation and the delta-scaling transform that maps a
// weighted row onto the unit-weight form used by every algorithm here.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bilincover {

/// Absolute tolerance used for feasibility decisions throughout the library.
inline constexpr double kFeasTol = 1e-9;

/// Raised when an instance or point violates a structural invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Instance {
  int n = 0;
  double r = 0.0;
  std::optional<std::vector<int>> u;  // absent: the unbounded set
  std::vector<double> delta;          // empty: all ones

  bool bounded() const { return u.has_value(); }
  int bound(int i) const { return (*u)[static_cast<std::size_t>(i)]; }
  /// Implied lower bound r / u_i on y_i.
  double implied_y_bound(int i) const { return r / bound(i); }
  double weight(int i) const {
    return delta.empty() ? 1.0 : delta[static_cast<std::size_t>(i)];
  }
  bool unit_weights() const {
    for (double d : delta)
      if (d != 1.0) return false;
    return true;
  }
};

struct Point {
  std::vector<double> x;
  std::vector<double> y;

  int size() const { return static_cast<int>(x.size()); }

  /// Builds a point from the interleaved tuple (x1, y1, x2, y2, ...).
  static Point interleaved(std::span<const double> xy) {
    if (xy.size() % 2 != 0)
      throw InvalidInput("interleaved point needs an even number of entries");
    Point p;
    for (std::size_t k = 0; k < xy.size(); k += 2) {
      p.x.push_back(xy[k]);
      p.y.push_back(xy[k + 1]);
    }
    return p;
  }

  std::vector<double> flatten() const {
    std::vector<double> out;
    out.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out.push_back(x[i]);
      out.push_back(y[i]);
    }
    return out;
  }
};

struct LinearObjective {
  std::vector<double> c;  // on x
  std::vector<double> d;  // on y

  double evaluate(const Point& p) const {
    double v = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * p.x[i] + d[i] * p.y[i];
    return v;
  }
};

/// Trim-loss data: one stock length, |F| finals with demands, n patterns.
struct TrimLossInstance {
  double stock_length = 0.0;
  std::vector<double> lengths;
  std::vector<double> demands;
  int n_patterns = 0;

  int n_finals() const { return static_cast<int>(lengths.size()); }
  /// Bound on x_ij implied by the knapsack row of a pattern.
  int implied_bound(int j) const {
    return static_cast<int>(
        std::floor(stock_length / lengths[static_cast<std::size_t>(j)]));
  }
};

inline Instance validate_instance(Instance inst) {
  if (inst.n < 1) throw InvalidInput("n must be at least 1");
  if (!(inst.r > 0.0) || !std::isfinite(inst.r))
    throw InvalidInput("r must be positive");
  const auto n = static_cast<std::size_t>(inst.n);
  if (inst.u) {
    if (inst.u->size() != n)
      throw InvalidInput("u has length " + std::to_string(inst.u->size()) +
                         ", expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      if ((*inst.u)[i] < 1)
        throw InvalidInput("u[" + std::to_string(i) + "] >= 1 required");
  }
  if (!inst.delta.empty()) {
    if (inst.delta.size() != n)
      throw InvalidInput("delta has length " + std::to_string(inst.delta.size()) +
                         ", expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      if (!(inst.delta[i] > 0.0) || !std::isfinite(inst.delta[i]))
        throw InvalidInput("delta[" + std::to_string(i) + "] must be positive");
  }
  return inst;
}

inline void check_point(const Point& p, const Instance& inst) {
  const auto n = static_cast<std::size_t>(inst.n);
  if (p.x.size() != n || p.y.size() != n)
    throw InvalidInput("point dimension does not match n = " +
                       std::to_string(inst.n));
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(p.x[i]) || !std::isfinite(p.y[i]))
      throw InvalidInput("point has a non-finite component");
}

inline void check_objective(const LinearObjective& obj, const Instance& inst) {
  const auto n = static_cast<std::size_t>(inst.n);
  if (obj.c.size() != n || obj.d.size() != n)
    throw InvalidInput("objective dimension does not match n = " +
                       std::to_string(inst.n));
}

inline TrimLossInstance validate_trimloss(TrimLossInstance t) {
  if (!(t.stock_length > 0.0)) throw InvalidInput("L must be positive");
  if (t.lengths.empty()) throw InvalidInput("at least one final is required");
  if (t.lengths.size() != t.demands.size())
    throw InvalidInput("lengths and demands differ in size");
  if (t.n_patterns < 1) throw InvalidInput("n_patterns must be at least 1");
  for (std::size_t j = 0; j < t.lengths.size(); ++j) {
    if (!(t.lengths[j] > 0.0))
      throw InvalidInput("lengths[" + std::to_string(j) + "] must be positive");
    if (t.lengths[j] > t.stock_length)
      throw InvalidInput("lengths[" + std::to_string(j) + "] exceeds L");
    if (!(t.demands[j] > 0.0))
      throw InvalidInput("demands[" + std::to_string(j) + "] must be positive");
  }
  return t;
}

/// sum_i delta_i x_i y_i
inline double eval_bilinear(const Point& p, const Instance& inst) {
  double s = 0.0;
  for (int i = 0; i < inst.n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    s += inst.weight(i) * p.x[k] * p.y[k];
  }
  return s;
}

/// Substitution y'_i = delta_i y_i. Maps a weighted row to the unit-weight
/// row; points, objectives and cut coefficients travel both ways.
class DeltaTransform {
 public:
  explicit DeltaTransform(std::vector<double> delta) : delta_(std::move(delta)) {
    for (double d : delta_)
      if (!(d > 0.0)) throw InvalidInput("delta entries must be positive");
  }

  std::span<const double> delta() const { return delta_; }

  Point to_unit(Point p) const {
    for (std::size_t i = 0; i < delta_.size(); ++i) p.y[i] *= delta_[i];
    return p;
  }
  Point from_unit(Point p) const {
    for (std::size_t i = 0; i < delta_.size(); ++i) p.y[i] /= delta_[i];
    return p;
  }
  /// d_i y_i = (d_i / delta_i) y'_i
  LinearObjective to_unit(LinearObjective obj) const {
    for (std::size_t i = 0; i < delta_.size(); ++i) obj.d[i] /= delta_[i];
    return obj;
  }
  /// beta_i y'_i = (beta_i delta_i) y_i
  std::vector<double> pull_back_beta(std::vector<double> beta) const {
    for (std::size_t i = 0; i < delta_.size(); ++i) beta[i] *= delta_[i];
    return beta;
  }

 private:
  std::vector<double> delta_;
};

/// Returns the unit-weight instance and the transform relating the two.
inline std::pair<Instance, DeltaTransform> apply_delta_transform(
    const Instance& inst) {
  std::vector<double> delta = inst.delta;
  if (delta.empty()) delta.assign(static_cast<std::size_t>(inst.n), 1.0);
  DeltaTransform tr(std::move(delta));
  Instance unit = inst;
  unit.delta.clear();
  return {unit, std::move(tr)};
}

}  // namespace bilincover
