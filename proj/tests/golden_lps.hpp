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

// Small LPs with hand-derived optima. The derivation for each value is in the
// comment next to it.

#pragma once

#include <string>
#include <vector>

#include "bilincover/simplex.hpp"

namespace bilincover::golden {

struct GoldenLp {
  std::string name;
  LpProblem lp;
  LpStatus status;
  double value;  // meaningful for kOptimal only
};

namespace detail {

inline LpRow row(std::vector<std::pair<int, double>> c, RowSense s, double rhs) {
  return LpRow{std::move(c), s, rhs};
}
constexpr RowSense GE = RowSense::kGreaterEqual;
constexpr RowSense LE = RowSense::kLessEqual;
constexpr RowSense EQ = RowSense::kEqual;

inline LpProblem vars(std::vector<double> cost, std::vector<double> lo,
                      std::vector<double> hi) {
  LpProblem p;
  for (std::size_t j = 0; j < cost.size(); ++j) p.add_variable(cost[j], lo[j], hi[j]);
  return p;
}

}  // namespace detail

inline std::vector<GoldenLp> golden_lps() {
  using namespace detail;
  std::vector<GoldenLp> out;
  const double inf = kInf;

  // Root relaxation of the two-column example: x at its bounds, y = 0,
  // -5 - 12 = -17. Variables x1, x2, y1, y2.
  out.push_back({"example_root", vars({-1, -2, 10, 12}, {0, 0, 0, 0}, {5, 6, inf, inf}),
                 LpStatus::kOptimal, -17.0});
  // Same with the cut 0.25 y1 + 0.3 y2 >= 1; both y have cost/coef ratio 40.
  {
    LpProblem p = vars({-1, -2, 10, 12}, {0, 0, 0, 0}, {5, 6, inf, inf});
    p.add_row(row({{2, 0.25}, {3, 0.3}}, GE, 1));
    out.push_back({"example_with_cut", p, LpStatus::kOptimal, 23.0});
  }
  // x + y >= 2: the whole segment is optimal, value 2.
  {
    LpProblem p = vars({1, 1}, {0, 0}, {inf, inf});
    p.add_row(row({{0, 1}, {1, 1}}, GE, 2));
    out.push_back({"segment_optimum", p, LpStatus::kOptimal, 2.0});
  }
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18: vertex (2, 6), 36.
  {
    LpProblem p = vars({-3, -5}, {0, 0}, {inf, inf});
    p.add_row(row({{0, 1}}, LE, 4));
    p.add_row(row({{1, 2}}, LE, 12));
    p.add_row(row({{0, 3}, {1, 2}}, LE, 18));
    out.push_back({"wyndor", p, LpStatus::kOptimal, -36.0});
  }
  // x + 2y <= 4, 3x + y <= 6 intersect at (8/5, 6/5).
  {
    LpProblem p = vars({-1, -1}, {0, 0}, {inf, inf});
    p.add_row(row({{0, 1}, {1, 2}}, LE, 4));
    p.add_row(row({{0, 3}, {1, 1}}, LE, 6));
    out.push_back({"two_row_vertex", p, LpStatus::kOptimal, -2.8});
  }
  // x + y >= 5 with x, y <= 1.
  {
    LpProblem p = vars({1, 1}, {0, 0}, {1, 1});
    p.add_row(row({{0, 1}, {1, 1}}, GE, 5));
    out.push_back({"bound_infeasible", p, LpStatus::kInfeasible, 0.0});
  }
  // min -x with x - y <= 1: ray (1, 1).
  {
    LpProblem p = vars({-1, 0}, {0, 0}, {inf, inf});
    p.add_row(row({{0, 1}, {1, -1}}, LE, 1));
    out.push_back({"ray_unbounded", p, LpStatus::kUnbounded, 0.0});
  }
  // x + y = 10, x <= 4: x = 4 is cheaper per unit, 8 + 18 = 26.
  {
    LpProblem p = vars({2, 3}, {0, 0}, {4, inf});
    p.add_row(row({{0, 1}, {1, 1}}, EQ, 10));
    out.push_back({"equality_with_bound", p, LpStatus::kOptimal, 26.0});
  }
  // Free x with x >= -3 as a row and x + y <= 5: value -3.
  {
    LpProblem p = vars({1, 0}, {-inf, 0}, {inf, inf});
    p.add_row(row({{0, 1}}, GE, -3));
    p.add_row(row({{0, 1}, {1, 1}}, LE, 5));
    out.push_back({"free_variable", p, LpStatus::kOptimal, -3.0});
  }
  // Diet: 4 x1 + 2 x2 >= 15 binds; x1 costs 0.15 per unit of it, x2 0.175.
  // x1 = 3.75 satisfies the other rows, value 2.25.
  {
    LpProblem p = vars({0.6, 0.35}, {0, 0}, {inf, inf});
    p.add_row(row({{0, 5}, {1, 7}}, GE, 8));
    p.add_row(row({{0, 4}, {1, 2}}, GE, 15));
    p.add_row(row({{0, 2}, {1, 1}}, GE, 3));
    out.push_back({"diet", p, LpStatus::kOptimal, 2.25});
  }
  // Klee-Minty, n = 3: optimum at (0, 0, 10000).
  {
    LpProblem p = vars({-100, -10, -1}, {0, 0, 0}, {inf, inf, inf});
    p.add_row(row({{0, 1}}, LE, 1));
    p.add_row(row({{0, 20}, {1, 1}}, LE, 100));
    p.add_row(row({{0, 200}, {1, 20}, {2, 1}}, LE, 10000));
    out.push_back({"klee_minty_3", p, LpStatus::kOptimal, -10000.0});
  }
  // Beale's cycling example; optimum -1/20 at x = (1/25, 0, 1, 0).
  {
    LpProblem p = vars({-0.75, 150, -0.02, 6}, {0, 0, 0, 0}, {inf, inf, 1, inf});
    p.add_row(row({{0, 0.25}, {1, -60}, {2, -0.04}, {3, 9}}, LE, 0));
    p.add_row(row({{0, 0.5}, {1, -90}, {2, -0.02}, {3, 3}}, LE, 0));
    out.push_back({"beale_cycling", p, LpStatus::kOptimal, -0.05});
  }
  // Negative lower bounds; x + y >= -1 binds, value -1.
  {
    LpProblem p = vars({1, 1}, {-2, -1}, {3, 4});
    p.add_row(row({{0, 1}, {1, 1}}, GE, -1));
    out.push_back({"negative_bounds", p, LpStatus::kOptimal, -1.0});
  }
  // Three unit boxes under a sum cap of 2.5.
  {
    LpProblem p = vars({-1, -1, -1}, {0, 0, 0}, {1, 1, 1});
    p.add_row(row({{0, 1}, {1, 1}, {2, 1}}, LE, 2.5));
    out.push_back({"capped_boxes", p, LpStatus::kOptimal, -2.5});
  }
  // Transportation: supplies 20, 30; demands 25, 25; costs 8 6 / 9 12.
  // Ship 20 on (1,2), 25 on (2,1), 5 on (2,2): 120 + 225 + 60 = 405.
  {
    LpProblem p = vars({8, 6, 9, 12}, {0, 0, 0, 0}, {inf, inf, inf, inf});
    p.add_row(row({{0, 1}, {1, 1}}, LE, 20));
    p.add_row(row({{2, 1}, {3, 1}}, LE, 30));
    p.add_row(row({{0, 1}, {2, 1}}, GE, 25));
    p.add_row(row({{1, 1}, {3, 1}}, GE, 25));
    out.push_back({"transportation", p, LpStatus::kOptimal, 405.0});
  }
  // Assignment 3x3, costs 4 1 3 / 2 0 5 / 3 2 2: the six permutations cost
  // 6, 11, 5, 9, 7, 6; the LP is integral, value 5.
  {
    const double c[3][3] = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
    LpProblem p;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p.add_variable(c[i][j], 0, inf);
    for (int i = 0; i < 3; ++i)
      p.add_row(row({{3 * i, 1}, {3 * i + 1, 1}, {3 * i + 2, 1}}, EQ, 1));
    for (int j = 0; j < 3; ++j) p.add_row(row({{j, 1}, {3 + j, 1}, {6 + j, 1}}, EQ, 1));
    out.push_back({"assignment_3", p, LpStatus::kOptimal, 5.0});
  }
  // Fractional knapsack: ratios 3.33, 3.25, 3.5; take c, a, half of b:
  // 7 + 10 + 6.5 = 23.5.
  {
    LpProblem p = vars({-10, -13, -7}, {0, 0, 0}, {1, 1, 1});
    p.add_row(row({{0, 3}, {1, 4}, {2, 2}}, LE, 7));
    out.push_back({"fractional_knapsack", p, LpStatus::kOptimal, -23.5});
  }
  // Fixed x = 2 forces y >= 1, value 3.
  {
    LpProblem p = vars({1, 1}, {2, 0}, {2, inf});
    p.add_row(row({{0, 1}, {1, 1}}, GE, 3));
    out.push_back({"fixed_variable", p, LpStatus::kOptimal, 3.0});
  }
  // x + y pinned to 1 by two inequalities; min x - y puts y = 1.
  {
    LpProblem p = vars({1, -1}, {0, 0}, {inf, inf});
    p.add_row(row({{0, 1}, {1, 1}}, GE, 1));
    p.add_row(row({{0, 1}, {1, 1}}, LE, 1));
    out.push_back({"pinned_by_inequalities", p, LpStatus::kOptimal, -1.0});
  }
  // x + y = 1 and x + y = 2.
  {
    LpProblem p = vars({1, 1}, {0, 0}, {inf, inf});
    p.add_row(row({{0, 1}, {1, 1}}, EQ, 1));
    p.add_row(row({{0, 1}, {1, 1}}, EQ, 2));
    out.push_back({"inconsistent_equalities", p, LpStatus::kInfeasible, 0.0});
  }
  // Duplicate equality rows; cheapest coordinate x takes all of 3.
  {
    LpProblem p = vars({1, 2, 3}, {0, 0, 0}, {inf, inf, inf});
    p.add_row(row({{0, 1}, {1, 1}, {2, 1}}, EQ, 3));
    p.add_row(row({{0, 2}, {1, 2}, {2, 2}}, EQ, 6));
    out.push_back({"redundant_equalities", p, LpStatus::kOptimal, 3.0});
  }
  return out;
}

}  // namespace bilincover::golden
