// Copyright 2026 The Admission Auctions Authors.
//
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

#include "admission/experiments.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "admission/error.hpp"
#include "admission/mechanisms.hpp"
#include "admission/serialize.hpp"
#include "oracle/oracles.hpp"

namespace admission {
namespace {

TEST(Diverges, DetectsBidsBetweenThresholds) {
  const auto drops = DropSchedule::uniform(Rate(1, 10), 3);
  // 0.79 lies in (0.77, 0.8) for the first user.
  EXPECT_TRUE(diverges(BidProfile({Rate(79, 100), Rate(4, 5), Rate(9, 10)}), drops));
  EXPECT_FALSE(diverges(BidProfile({Rate(1, 10), Rate(1, 10), Rate(9, 10)}), drops));
}

TEST(EstimateDivergence, WithinBound) {
  const auto a = estimate_divergence(4, DropSchedule::uniform(Rate(1, 100), 4), 100000, 42);
  EXPECT_EQ(a.analytic_bound, Rate(1, 25));
  EXPECT_TRUE(a.within_bound());
  EXPECT_DOUBLE_EQ(a.point_estimate, static_cast<double>(a.divergent) / 100000.0);

  const auto b = estimate_divergence(5, DropSchedule::uniform(Rate(1, 50), 5), 100000, 7);
  EXPECT_EQ(b.analytic_bound, Rate(1, 10));
  EXPECT_TRUE(b.within_bound());
}

TEST(EstimateDivergence, ZeroDropRejected) {
  EXPECT_THROW(DropSchedule::uniform(Rate(0), 2), InputError);
}

TEST(EstimateDivergence, TwoUsersMatchAnalyticProbability) {
  const Rate d(1, 5);
  const std::uint64_t samples = 200000;
  const auto est = estimate_divergence(2, DropSchedule::uniform(d, 2), samples, 11);
  const double p = to_double(oracle::two_user_divergence(d));
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(samples));
  EXPECT_NEAR(est.point_estimate, p, 4 * se);
}

TEST(EstimateDivergence, SameSeedSameResult) {
  const auto drops = DropSchedule::uniform(Rate(1, 10), 3);
  const auto a = estimate_divergence(3, drops, 5000, 99);
  const auto b = estimate_divergence(3, drops, 5000, 99);
  EXPECT_EQ(a.divergent, b.divergent);
  EXPECT_EQ(io::to_json(a).dump(), io::to_json(b).dump());
}

TEST(TightScalabilityInstance, Examples) {
  const auto two = tight_scalability_instance(2);
  EXPECT_EQ(two, BidProfile({Rate(0), Rate(0), Rate(0), Rate(1, 2), Rate(1, 2)}));
  EXPECT_EQ(admittance_of(MechanismId::kUniformPrice, two), Rate(2));
  EXPECT_EQ(admittance_of(MechanismId::kOmniscientMultiPrice, two), Rate(5));

  const auto one = tight_scalability_instance(1);
  EXPECT_EQ(one, BidProfile({Rate(0), Rate(0), Rate(1)}));
  EXPECT_EQ(admittance_of(MechanismId::kUniformPrice, one), Rate(1));
  EXPECT_EQ(admittance_of(MechanismId::kOmniscientMultiPrice, one), Rate(3));

  const auto ten = tight_scalability_instance(10);
  EXPECT_EQ(ten.size(), 21u);
  EXPECT_EQ(admittance(run_abar_distribution(ten)), Rate(10));
  EXPECT_EQ(admittance(run_t(ten)), Rate(21));
  EXPECT_THROW(tight_scalability_instance(0), InputError);
}

TEST(WorstCaseInstance, Examples) {
  const auto three = worst_case_astar_instance(3, 2);
  EXPECT_EQ(three, BidProfile({Rate(1, 2), Rate(1, 2), Rate(1, 2)}));
  EXPECT_EQ(run_astar(three, DropSchedule::uniform(Rate(1, 10), 3)).size(), 0u);
  EXPECT_EQ(admittance(run_f(three)), Rate(2));

  const auto ten = worst_case_astar_instance(10, 9);
  EXPECT_EQ(run_astar(ten, DropSchedule::uniform(Rate(1, 10), 10)).size(), 0u);
  EXPECT_EQ(admittance_of(MechanismId::kOmniscientSinglePrice, ten), Rate(9));

  EXPECT_THROW(worst_case_astar_instance(2, 2), InputError);
  EXPECT_THROW(worst_case_astar_instance(2, 0), InputError);
}

TEST(AdmittanceSweep, RowsRespectSandwichAndScalability) {
  const auto sweep = admittance_sweep(5, 1000, 1, DropSchedule::uniform(Rate(1, 10), 5));
  ASSERT_EQ(sweep.rows.size(), 1000u);
  for (const auto& row : sweep.rows) {
    EXPECT_LE(row.f - 1, row.abar);
    EXPECT_LE(row.abar, row.f);
    const long t_floor = static_cast<long>(boost::multiprecision::numerator(row.t) /
                                           boost::multiprecision::denominator(row.t)) / 2;
    EXPECT_GE(row.abar, t_floor);
    EXPECT_LE(row.abar, row.t);
    EXPECT_LE(row.astar, row.t);
  }
}

TEST(AdmittanceSweep, SingleUserAlwaysAdmitted) {
  const auto sweep = admittance_sweep(1, 10, 5, DropSchedule());
  for (const auto& row : sweep.rows) {
    EXPECT_EQ(row.abar, 1);
    EXPECT_EQ(row.astar, 1);
    EXPECT_EQ(row.f, 1);
    EXPECT_EQ(row.t, 1);
  }
}

TEST(AdmittanceSweep, SmallerDropsAdmitAtLeastAsMany) {
  const auto small = admittance_sweep(5, 1000, 1, DropSchedule::uniform(Rate(1, 1000), 5));
  const auto large = admittance_sweep(5, 1000, 1, DropSchedule::uniform(Rate(1, 5), 5));
  const double pooled = std::sqrt((small.stddev_astar * small.stddev_astar +
                                   large.stddev_astar * large.stddev_astar) / 1000.0);
  EXPECT_GE(to_double(small.mean_astar), to_double(large.mean_astar) - 3 * pooled);
}

TEST(AdmittanceSweep, CsvIsDeterministic) {
  const auto drops = DropSchedule::uniform(Rate(1, 10), 4);
  std::ostringstream a;
  std::ostringstream b;
  io::write_sweep_csv(a, admittance_sweep(4, 50, 3, drops));
  io::write_sweep_csv(b, admittance_sweep(4, 50, 3, drops));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "sample,abar,astar,f,t");
}

}  // namespace
}  // namespace admission
