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

#include "bilincover/optimize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"

namespace bilincover {
namespace {

Instance Bounded(double r, std::vector<int> u) {
  return Instance{static_cast<int>(u.size()), r, u, {}};
}
Instance Free(int n, double r) { return Instance{n, r, std::nullopt, {}}; }

TEST(ColumnSTest, FloorWinsTie) {
  const ColumnOpt c = optimize_column_S(1, 1, 20);
  EXPECT_EQ(c.x, 4);
  EXPECT_DOUBLE_EQ(c.y, 5);
  EXPECT_DOUBLE_EQ(c.value, 9);
}

TEST(ColumnSTest, IntegralStationaryPoint) {
  const ColumnOpt c = optimize_column_S(1, 5, 20);
  EXPECT_EQ(c.x, 10);
  EXPECT_DOUBLE_EQ(c.y, 2);
  EXPECT_DOUBLE_EQ(c.value, 20);
}

TEST(ColumnSTest, ClampsToOne) {
  const ColumnOpt c = optimize_column_S(100, 1, 20);
  EXPECT_EQ(c.x, 1);
  EXPECT_DOUBLE_EQ(c.y, 20);
  EXPECT_DOUBLE_EQ(c.value, 120);
}

TEST(ColumnSTest, MatchesScan) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ud(0.01, 50);
  for (int t = 0; t < 2000; ++t) {
    const double c = ud(rng), d = ud(rng), r = ud(rng);
    const ColumnOpt col = optimize_column_S(c, d, r);
    double best = 1e300;
    for (int x = 1; x <= 10000; ++x) best = std::min(best, c * x + d * r / x);
    EXPECT_NEAR(col.value, best, 1e-9 * std::max(1.0, best));
  }
}

TEST(ColumnSTest, RejectsNonPositive) {
  EXPECT_THROW(optimize_column_S(0, 1, 1), InvalidInput);
  EXPECT_THROW(optimize_column_S(1, -1, 1), InvalidInput);
}

TEST(OptimizeSTest, UnitCostExampleValue) {
  const OptResult r = optimize_over_S({{1, 1}, {1, 1}}, Free(2, 20));
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_DOUBLE_EQ(r.value, 9);
  EXPECT_EQ(r.solution->flatten(), (std::vector<double>{4, 5, 0, 0}));
}

TEST(OptimizeSTest, ZeroDUsesSmallestC) {
  const OptResult r = optimize_over_S({{2, 3}, {0, 0}}, Free(2, 7));
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_DOUBLE_EQ(r.value, 2);
  EXPECT_EQ(r.solution->flatten(), (std::vector<double>{1, 7, 0, 0}));
}

TEST(OptimizeSTest, ZeroDOnOneColumnOnly) {
  const OptResult r = optimize_over_S({{3, 1}, {0, 5}}, Free(2, 20));
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  // Column 1 costs 3 at x = 1; column 2 is min x + 100/x = 20.
  EXPECT_DOUBLE_EQ(r.value, 3);
}

TEST(OptimizeSTest, InfimumNotAttained) {
  for (const LinearObjective& o : {LinearObjective{{0, 1}, {1, 1}},
                                   LinearObjective{{1, 0}, {1, 2}},
                                   LinearObjective{{0, 0}, {3, 0.1}}}) {
    const OptResult r = optimize_over_S(o, Free(2, 5));
    EXPECT_EQ(r.status, OptStatus::kInfimumNotAttained);
    EXPECT_EQ(r.value, 0.0);
    EXPECT_FALSE(r.solution.has_value());
    const auto w = epsilon_witness_S(o, Free(2, 5), 1e-3);
    ASSERT_TRUE(w.has_value());
    EXPECT_LE(o.evaluate(*w), 1e-3 + 1e-12);
    EXPECT_GE(eval_bilinear(*w, Free(2, 5)), 5 - 1e-9);
  }
}

TEST(OptimizeSTest, ZeroColumnAttainsZero) {
  const OptResult r = optimize_over_S({{0, 0}, {1, 0}}, Free(2, 5));
  EXPECT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_GE(eval_bilinear(*r.solution, Free(2, 5)), 5 - 1e-12);
}

TEST(OptimizeSTest, Unbounded) {
  for (const LinearObjective& o : {LinearObjective{{1, 1}, {-1, 0}},
                                   LinearObjective{{-1, 1}, {1, 1}},
                                   LinearObjective{{0, -1e-9}, {0, 0}}})
    EXPECT_EQ(optimize_over_S(o, Free(2, 5)).status, OptStatus::kUnbounded);
}

TEST(OptimizeSTest, MatchesScanOverExtremePoints) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ud(0, 10);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    LinearObjective o;
    for (int i = 0; i < n; ++i) {
      o.c.push_back(ud(rng) + 0.05);
      o.d.push_back(rng() % 5 == 0 ? 0.0 : ud(rng));
    }
    const double r = ud(rng) * 10 + 0.1;
    const OptResult res = optimize_over_S(o, Free(n, r));
    ASSERT_EQ(res.status, OptStatus::kOptimal);
    const double want = oracle::min_over_S(o, r);
    EXPECT_NEAR(res.value, want, 1e-9 * std::max(1.0, std::abs(want)));
    EXPECT_NEAR(o.evaluate(*res.solution), res.value, 1e-9 * std::max(1.0, res.value));
  }
}

TEST(OptimizePiTest, ExampleColumns) {
  const LinearObjective o{{-1, -2}, {10, 12}};
  const ColumnSubproblem a = optimize_Pi(o, Bounded(20, {5, 6}), 0);
  EXPECT_EQ(a.point.flatten(), (std::vector<double>{5, 4, 6, 0}));
  EXPECT_DOUBLE_EQ(a.value, 23);
  const ColumnSubproblem b = optimize_Pi(o, Bounded(20, {5, 6}), 1);
  EXPECT_EQ(b.point.x, (std::vector<double>{5, 6}));
  EXPECT_DOUBLE_EQ(b.point.y[0], 0);
  EXPECT_NEAR(b.point.y[1], 10.0 / 3, 1e-15);
  EXPECT_NEAR(b.value, 23, 1e-12);
}

TEST(OptimizePiTest, InteriorStationaryPoint) {
  const ColumnSubproblem a = optimize_Pi({{1, 1}, {1, 1}}, Bounded(20, {10, 10}), 0);
  EXPECT_EQ(a.point.flatten(), (std::vector<double>{4, 5, 0, 0}));
  EXPECT_DOUBLE_EQ(a.value, 9);
}

TEST(OptimizePiTest, StationaryPointAboveBoundClampsToBound) {
  // eta = sqrt(20 * 10 / 1) = 14.1 > u = 3, so x = 3.
  const ColumnSubproblem a = optimize_Pi({{1}, {10}}, Bounded(20, {3}), 0);
  EXPECT_EQ(a.point.x[0], 3);
  EXPECT_NEAR(a.value, 3 + 200.0 / 3, 1e-12);
}

TEST(OptimizePiTest, RejectsNegativeD) {
  EXPECT_THROW(optimize_Pi({{1, 1}, {1, -1}}, Bounded(20, {2, 2}), 0), InvalidInput);
}

TEST(OptimizeSUTest, ExampleOptimum) {
  const OptResult r = optimize_over_SU({{-1, -2}, {10, 12}}, Bounded(20, {5, 6}));
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_DOUBLE_EQ(r.value, 23);
  EXPECT_EQ(r.solution->flatten(), (std::vector<double>{5, 4, 6, 0}));
}

TEST(OptimizeSUTest, UnitCostExampleValue) {
  const OptResult r = optimize_over_SU({{1, 1}, {1, 1}}, Bounded(20, {10, 10}));
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_DOUBLE_EQ(r.value, 9);
}

TEST(OptimizeSUTest, Unbounded) {
  for (const LinearObjective& o : {LinearObjective{{1, 1}, {0, -3}},
                                   LinearObjective{{-5, -5}, {-1, 0}},
                                   LinearObjective{{0, 0}, {2, -0.5}}})
    EXPECT_EQ(optimize_over_SU(o, Bounded(6, {2, 2})).status, OptStatus::kUnbounded);
}

TEST(OptimizeSUTest, NonPositiveCZeroD) {
  const OptResult r = optimize_over_SU({{-1, -1}, {0, 0}}, Bounded(6, {2, 3}));
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_DOUBLE_EQ(r.value, -5);
  EXPECT_EQ(r.solution->flatten(), (std::vector<double>{2, 3, 3, 0}));
  const OptResult s = optimize_over_SU({{0, -4, 0}, {0, 0, 0}}, Bounded(1, {3, 2, 1}));
  EXPECT_DOUBLE_EQ(s.value, -8);
  const OptResult z = optimize_over_SU({{0}, {0}}, Bounded(7, {3}));
  EXPECT_DOUBLE_EQ(z.value, 0);
  EXPECT_GE(eval_bilinear(*z.solution, Bounded(7, {3})), 7 - 1e-12);
}

TEST(OptimizeSUTest, WeightedRow) {
  Instance inst = Bounded(20, {5, 6});
  inst.delta = {2.0, 1.0};
  const LinearObjective o{{-1, -2}, {10, 12}};
  const OptResult r = optimize_over_SU(o, inst);
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_GE(eval_bilinear(*r.solution, inst), 20 - 1e-9);
  EXPECT_NEAR(o.evaluate(*r.solution), r.value, 1e-9);
  // Brute force in the unit space: y' = 2 y1 has cost 5 per unit.
  const auto [unit, tr] = apply_delta_transform(inst);
  EXPECT_NEAR(r.value, oracle::min_over_extreme_points(tr.to_unit(o), unit), 1e-9);
}

TEST(OptimizeSUTest, TiesGoToSmallestColumn) {
  const OptResult r = optimize_over_SU({{1, 1}, {1, 1}}, Bounded(4, {4, 4}));
  ASSERT_EQ(r.status, OptStatus::kOptimal);
  EXPECT_EQ(r.solution->x[1], 0.0);
}

}  // namespace
}  // namespace bilincover
