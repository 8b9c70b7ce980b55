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

// Exhaustive V- and H-descriptions of conv(S^U) for small instances. These
// enumerate everything and are meant as ground truth for the closed-form
// routines, not as production separators.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bilincover/model.hpp"
#include "bilincover/separation.hpp"

namespace bilincover {

struct HullLimits {
  int max_n = 12;
  std::int64_t max_facets = 1'000'000;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extreme points of conv(S^U): one active index t with x_t = p in 1..u_t,
/// y_t = r/p, every other x_j in {0, u_j} with y_j = 0. Ordered by t, then p,
/// then the {0, u_j} pattern read lexicographically over j != t.
inline std::vector<Point> enumerate_extreme_points(const Instance& inst,
                                                   const HullLimits& lim = {}) {
  if (!inst.bounded()) throw InvalidInput("extreme points require bounds u");
  if (inst.n > lim.max_n) throw CapExceeded("n exceeds the enumeration cap");
  const auto n = static_cast<std::size_t>(inst.n);
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  std::vector<Point> out;
  for (std::size_t t = 0; t < n; ++t) {
    for (int p = 1; p <= (*inst.u)[t]; ++p) {
      for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        Point pt{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
        pt.x[t] = p;
        pt.y[t] = inst.r / p;
        std::size_t bit = n - 1;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == t) continue;
          --bit;
          if ((mask >> bit) & 1U) pt.x[j] = (*inst.u)[j];
        }
        out.push_back(std::move(pt));
      }
    }
  }
  return out;
}

/// 2^{n-1} sum_i u_i
inline std::int64_t extreme_point_count(const Instance& inst) {
  std::int64_t s = 0;
  for (int i = 0; i < inst.n; ++i) s += inst.bound(i);
  return s << (inst.n - 1);
}

/// prod_i (u_i + 1)
inline std::int64_t facet_count(const Instance& inst) {
  std::int64_t c = 1;
  for (int i = 0; i < inst.n; ++i) {
    c *= inst.bound(i) + 1;
    if (c > std::numeric_limits<std::int64_t>::max() / 64) break;
  }
  return c;
}

/// Every facet of conv(S^L), one per index vector in prod_i {1..u_i+1},
/// lexicographic with the last column varying fastest.
inline std::vector<Cut> enumerate_facets_SL(const Instance& inst,
                                            const HullLimits& lim = {}) {
  if (!inst.bounded()) throw InvalidInput("facet enumeration requires bounds u");
  if (facet_count(inst) > lim.max_facets)
    throw CapExceeded("facet count exceeds the enumeration cap");
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<std::int64_t> w(n, 1);
  std::vector<Cut> out;
  out.reserve(static_cast<std::size_t>(facet_count(inst)));
  while (true) {
    out.push_back(cut_from_indices(w, inst));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (w[i] < (*inst.u)[i] + 1) {
        ++w[i];
        break;
      }
      w[i] = 1;
      if (i == 0) return out;
    }
  }
}

enum class WitnessKind { kNone, kNegative, kUpperBound, kFacet };

struct Membership {
  bool inside = true;
  WitnessKind kind = WitnessKind::kNone;
  int index = -1;          // offending coordinate for bound/sign witnesses
  std::optional<Cut> cut;  // most violated facet for kFacet
  double lhs = 0.0;        // facet value at the point for kFacet
};

/// Brute-force membership in conv(S^U) = conv(S^L) intersected with x <= u.
/// The facet witness is the most violated one (first in enumeration order on
/// ties).
inline Membership membership(const Point& p, const Instance& inst,
                             double tol = kFeasTol, const HullLimits& lim = {}) {
  check_point(p, inst);
  Membership m;
  for (int i = 0; i < inst.n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (p.x[s] < -tol || p.y[s] < -tol) {
      m.inside = false;
      m.kind = WitnessKind::kNegative;
      m.index = i;
      return m;
    }
  }
  for (int i = 0; i < inst.n; ++i) {
    if (p.x[static_cast<std::size_t>(i)] > inst.bound(i) + tol) {
      m.inside = false;
      m.kind = WitnessKind::kUpperBound;
      m.index = i;
      return m;
    }
  }
  const std::vector<Cut> facets = enumerate_facets_SL(inst, lim);
  double best = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const double v = facets[k].evaluate(p);
    if (v < best) {
      best = v;
      arg = k;
    }
  }
  m.lhs = best;
  if (best < 1.0 - tol) {
    m.inside = false;
    m.kind = WitnessKind::kFacet;
    m.cut = facets[arg];
  }
  return m;
}

namespace detail {

// Row rank by Gaussian elimination with partial pivoting; rows are scaled to
// unit max-norm first.
inline int matrix_rank(std::vector<std::vector<double>> rows, double tol = 1e-7) {
  for (auto& r : rows) {
    double mx = 0.0;
    for (double v : r) mx = std::max(mx, std::abs(v));
    if (mx > 0.0)
      for (double& v : r) v /= mx;
  }
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t piv = top;
    for (std::size_t r = top + 1; r < rows.size(); ++r)
      if (std::abs(rows[r][c]) > std::abs(rows[piv][c])) piv = r;
    if (std::abs(rows[piv][c]) <= tol) continue;
    std::swap(rows[piv], rows[top]);
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      const double f = rows[r][c] / rows[top][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[top][k];
    }
    ++top;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Dimension of the face of conv(S^U) where `cut` holds with equality,
/// computed from the tight extreme points and tight extreme rays (the y_i
/// axes). Returns -1 when no extreme point is tight. A facet has dimension
/// 2n - 1 when the hull is full-dimensional.
inline int face_dimension(const Cut& cut, const Instance& inst,
                          double tol = 1e-7, const HullLimits& lim = {}) {
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<std::vector<double>> tight;
  for (const Point& p : enumerate_extreme_points(inst, lim))
    if (std::abs(cut.evaluate(p) - 1.0) <= tol) tight.push_back(p.flatten());
  if (tight.empty()) return -1;
  std::vector<std::vector<double>> dirs;
  for (std::size_t k = 1; k < tight.size(); ++k) {
    std::vector<double> d(2 * n);
    for (std::size_t c = 0; c < 2 * n; ++c) d[c] = tight[k][c] - tight[0][c];
    dirs.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(cut.beta[i]) <= tol) {
      std::vector<double> ray(2 * n, 0.0);
      ray[2 * i + 1] = 1.0;
      dirs.push_back(std::move(ray));
    }
  }
  return detail::matrix_rank(std::move(dirs), tol);
}

}  // namespace bilincover
