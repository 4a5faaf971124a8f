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

#include "admission/mechanisms.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "admission/error.hpp"
#include "admission/random.hpp"

namespace admission {
namespace {

BidProfile profile(std::initializer_list<const char*> texts) {
  std::vector<Rate> bids;
  for (const char* t : texts) bids.push_back(parse_rate(t));
  return BidProfile(std::move(bids));
}

BidProfile others(std::initializer_list<const char*> texts) {
  std::vector<Rate> bids;
  for (const char* t : texts) bids.push_back(parse_rate(t));
  return BidProfile::others(std::move(bids));
}

using Entry = OutcomeDistribution::Entry;
using Users = std::vector<std::size_t>;

const DropSchedule kTenth4 = DropSchedule::uniform(Rate(1, 10), 4);
const DropSchedule kTenth3 = DropSchedule::uniform(Rate(1, 10), 3);

// --- uniform-price auction -------------------------------------------------

TEST(MBar, Examples) {
  EXPECT_EQ(m_bar(profile({"0.5", "0.4", "0.3", "0.4"})), 2u);
  EXPECT_EQ(m_bar(profile({"0.7"})), 1u);
  EXPECT_EQ(m_bar(profile({"0.1", "0.1", "0.9"})), 1u);
}

TEST(RunAbarDistribution, TieAtBoundarySplitsEvenly) {
  const auto dist = run_abar_distribution(profile({"0.5", "0.4", "0.3", "0.4"}));
  const OutcomeDistribution expected({
      {Outcome::single_priced({1, 2}, Rate(2, 5)), Rate(1, 2)},
      {Outcome::single_priced({2, 3}, Rate(2, 5)), Rate(1, 2)},
  });
  EXPECT_EQ(dist, expected);
}

TEST(RunAbarDistribution, SingleUserPaysPseudoBid) {
  EXPECT_EQ(run_abar_distribution(profile({"0.7"})),
            OutcomeDistribution::certain(Outcome::single_priced({0}, Rate(1))));
}

TEST(RunAbarDistribution, TwoEqualBidsEachHalf) {
  const OutcomeDistribution expected({
      {Outcome::single_priced({0}, Rate(1, 2)), Rate(1, 2)},
      {Outcome::single_priced({1}, Rate(1, 2)), Rate(1, 2)},
  });
  EXPECT_EQ(run_abar_distribution(profile({"0.5", "0.5"})), expected);
}

TEST(RunAbarDistribution, LargeTieGroupIsRejected) {
  std::vector<Rate> bids(40, Rate(1, 20));
  const BidProfile p(bids);
  EXPECT_EQ(m_bar(p), 20u);
  try {
    run_abar_distribution(p);
    FAIL() << "expected tie_group_too_large";
  } catch (const InputError& e) {
    EXPECT_EQ(e.reason(), "tie_group_too_large");
  }
  EXPECT_EQ(admittance_of(MechanismId::kUniformPrice, p), Rate(20));
}

TEST(RunAbarSampled, DrawsFromSupport) {
  const auto p = profile({"0.5", "0.4", "0.3", "0.4"});
  const auto dist = run_abar_distribution(p);
  const Outcome drawn = run_abar_sampled(p, 7);
  bool found = false;
  for (const auto& e : dist.entries()) found = found || e.outcome == drawn;
  EXPECT_TRUE(found);
  EXPECT_EQ(run_abar_sampled(p, 7), drawn);
}

TEST(RunAbarSampled, DeterministicSupport) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull, 123456789ull}) {
    EXPECT_EQ(run_abar_sampled(profile({"0.7"}), seed), Outcome::single_priced({0}, Rate(1)));
  }
}

TEST(RunAbarSampled, FrequencyMatchesExactDistribution) {
  const auto p = profile({"0.5", "0.5"});
  const int trials = 10000;
  int first = 0;
  for (int seed = 1; seed <= trials; ++seed) {
    if (run_abar_sampled(p, static_cast<std::uint64_t>(seed)).admits(0)) ++first;
  }
  const double freq = static_cast<double>(first) / trials;
  const double se = std::sqrt(0.25 / trials);
  EXPECT_LE(std::abs(freq - 0.5), 3 * se) << freq;
}

// --- thresholds -------------------------------------------------------------

TEST(SupremumWinningBid, Examples) {
  EXPECT_EQ(supremum_winning_bid(others({"0.4", "0.3", "0.4"})), Rate(2, 5));
  EXPECT_EQ(supremum_winning_bid(others({"0.8", "0.9"})), Rate(4, 5));
  EXPECT_EQ(supremum_winning_bid(others({})), Rate(1));
}

TEST(M1M2, Examples) {
  EXPECT_EQ(m1_m2(others({"0.4", "0.3", "0.4"})), (RankPair{2, 1}));
  EXPECT_EQ(m1_m2(others({"0.1", "0.9"})), (RankPair{1, 1}));
  EXPECT_EQ(m1_m2(others({"0.5", "0.5"})), (RankPair{2, 1}));
}

TEST(M1M2, SecondRankCanBeZero) {
  // (j + 1) * sigma_j > 1 already at j = 1.
  EXPECT_EQ(m1_m2(others({"0.8", "0.9"})), (RankPair{1, 0}));
}

TEST(HighestWinningBid, Examples) {
  EXPECT_EQ(highest_winning_bid(others({"0.4", "0.3", "0.4"}), kTenth4), Rate(59, 150));
  EXPECT_EQ(highest_winning_bid(others({"0.8", "0.9"}), kTenth3), Rate(77, 100));
  EXPECT_EQ(highest_winning_bid(others({"0.1", "0.9"}), kTenth3), Rate(1, 10));
}

TEST(HighestWinningBid, NoOthersMeansOne) {
  EXPECT_EQ(highest_winning_bid(others({}), DropSchedule()), Rate(1));
}

TEST(HighestWinningBid, UsesTheDropIndexedByM1) {
  // m1 = 2 for these others, so only d_2 matters.
  const DropSchedule drops({Rate(9, 10), Rate(1, 10), Rate(9, 10)});
  EXPECT_EQ(highest_winning_bid(others({"0.4", "0.3", "0.4"}), drops), Rate(59, 150));
}

// --- dropping mechanism -----------------------------------------------------

TEST(RunAstar, Examples) {
  const Outcome ex2 = run_astar(profile({"0.5", "0.4", "0.3", "0.4"}), kTenth4);
  EXPECT_EQ(ex2, Outcome::single_priced({2}, Rate(59, 150)));

  EXPECT_EQ(run_astar(profile({"0.1", "0.1", "0.9"}), kTenth3),
            Outcome::single_priced({0, 1}, Rate(1, 10)));

  EXPECT_EQ(run_astar(profile({"0.5", "0.5", "0.5"}), kTenth3).size(), 0u);
  EXPECT_EQ(highest_winning_bid(others({"0.5", "0.5"}), kTenth3), Rate(29, 60));
}

TEST(RunAstar, BidderJustBelowSupremumIsRejected) {
  const Outcome o = run_astar(profile({"0.79", "0.8", "0.9"}), kTenth3);
  EXPECT_FALSE(o.admits(0));
  // The uniform-price auction admits that bidder at 0.8.
  EXPECT_EQ(run_abar_distribution(profile({"0.79", "0.8", "0.9"})),
            OutcomeDistribution::certain(Outcome::single_priced({0}, Rate(4, 5))));
}

TEST(RunAstar, SingleUserAdmittedAtOne) {
  EXPECT_EQ(run_astar(profile({"1"}), DropSchedule()), Outcome::single_priced({0}, Rate(1)));
  EXPECT_EQ(run_astar(profile({"0.3"}), DropSchedule::uniform(Rate(1, 10), 1)),
            Outcome::single_priced({0}, Rate(1)));
}

TEST(RunAstar, RejectsShortSchedule) {
  try {
    run_astar(profile({"0.1", "0.2", "0.3"}), DropSchedule({Rate(1, 10)}));
    FAIL() << "expected drop_schedule_too_short";
  } catch (const InputError& e) {
    EXPECT_EQ(e.reason(), "drop_schedule_too_short");
  }
}

// --- omniscient baselines ---------------------------------------------------

TEST(RunF, Examples) {
  const OutcomeDistribution three({
      {Outcome::single_priced({0, 1}, Rate(1, 2)), Rate(1, 3)},
      {Outcome::single_priced({0, 2}, Rate(1, 2)), Rate(1, 3)},
      {Outcome::single_priced({1, 2}, Rate(1, 2)), Rate(1, 3)},
  });
  EXPECT_EQ(run_f(profile({"0.5", "0.5", "0.5"})), three);
  EXPECT_EQ(run_f(profile({"0.7"})),
            OutcomeDistribution::certain(Outcome::single_priced({0}, Rate(7, 10))));
  const OutcomeDistribution ex1({
      {Outcome::single_priced({1, 2}, Rate(2, 5)), Rate(1, 2)},
      {Outcome::single_priced({2, 3}, Rate(2, 5)), Rate(1, 2)},
  });
  EXPECT_EQ(run_f(profile({"0.5", "0.4", "0.3", "0.4"})), ex1);
}

TEST(RunT, Examples) {
  const auto all = run_t(profile({"0", "0", "0", "0.5", "0.5"}));
  EXPECT_EQ(all, OutcomeDistribution::certain(Outcome({{0, Rate(0)},
                                                       {1, Rate(0)},
                                                       {2, Rate(0)},
                                                       {3, Rate(1, 2)},
                                                       {4, Rate(1, 2)}})));
  EXPECT_EQ(run_t(profile({"0.7"})),
            OutcomeDistribution::certain(Outcome::single_priced({0}, Rate(7, 10))));
  const OutcomeDistribution ex1({
      {Outcome({{1, Rate(2, 5)}, {2, Rate(3, 10)}}), Rate(1, 2)},
      {Outcome({{2, Rate(3, 10)}, {3, Rate(2, 5)}}), Rate(1, 2)},
  });
  EXPECT_EQ(run_t(profile({"0.5", "0.4", "0.3", "0.4"})), ex1);
}

TEST(Admittance, Examples) {
  EXPECT_EQ(admittance(run_abar_distribution(profile({"0.5", "0.4", "0.3", "0.4"}))), Rate(2));
  for (MechanismId id : {MechanismId::kUniformPrice, MechanismId::kDropping,
                         MechanismId::kOmniscientSinglePrice, MechanismId::kOmniscientMultiPrice}) {
    EXPECT_EQ(admittance(run_mechanism(id, profile({"0.7"}), DropSchedule())), Rate(1));
  }
  EXPECT_EQ(admittance(run_f(profile({"0.5", "0.5", "0.5"}))), Rate(2));
}

TEST(MechanismId, ParseAndName) {
  EXPECT_EQ(parse_mechanism("ASTAR"), MechanismId::kDropping);
  EXPECT_EQ(mechanism_name(parse_mechanism("t")), "t");
  EXPECT_THROW(parse_mechanism("vcg"), InputError);
}

// --- invariants on random profiles -------------------------------------------

class RandomProfiles : public ::testing::Test {
 protected:
  // Mixes coarse grid bids (ties likely) with 2^-64 uniform bids.
  BidProfile draw(std::size_t n) {
    if (uniform_below(engine_, 2) == 0) return uniform_profile(engine_, n);
    std::vector<Rate> bids;
    for (std::size_t i = 0; i < n; ++i) {
      bids.emplace_back(static_cast<long>(uniform_below(engine_, 11)), 10);
    }
    return BidProfile(std::move(bids));
  }
  Engine engine_ = substream(77, 0);
};

TEST_F(RandomProfiles, UniformPriceRateIsLowestLosingBid) {
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = draw(1 + uniform_below(engine_, 8));
    const std::size_t m = m_bar(p);
    const Rate price = sort_with_pseudo(p).at(m + 1);
    EXPECT_LE(price * static_cast<long>(m), 1);
    const auto dist = run_abar_distribution(p);
    for (const auto& e : dist.entries()) {
      EXPECT_EQ(e.outcome.size(), m);
      EXPECT_EQ(e.outcome.uniform_rate(), price);
    }
  }
}

TEST_F(RandomProfiles, DroppedThresholdMatchesEquivalentForm) {
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + uniform_below(engine_, 8);
    const auto rest = draw(n).without(0);
    const DropSchedule drops = DropSchedule::uniform(Rate(static_cast<long>(1 + uniform_below(engine_, 9)), 10), n);
    const auto [m1, m2] = m1_m2(rest);
    const Rate supremum = supremum_winning_bid(rest);
    const Rate z = highest_winning_bid(rest, drops);

    EXPECT_LE(m2, m1);
    EXPECT_EQ(supremum, sort_with_pseudo(rest).at(m1));
    EXPECT_TRUE(in_unit_interval(z));
    EXPECT_LE(z, supremum);

    if (rest.empty()) {
      EXPECT_EQ(z, 1);
      continue;
    }
    // Route 2: drop iff sigma_{m1} > 1/(m1+1).
    const Rate cutoff(1, static_cast<long>(m1 + 1));
    if (supremum > cutoff) {
      EXPECT_NE(m1, m2);
      const Rate& d = drops.at(m1);
      EXPECT_EQ(z, supremum - d * (supremum - cutoff));
      EXPECT_GT(z, cutoff);
      EXPECT_LT(z, supremum);
    } else {
      EXPECT_EQ(m1, m2);
      EXPECT_EQ(z, supremum);
    }
  }
}

TEST_F(RandomProfiles, FastAdmittanceMatchesDistribution) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + uniform_below(engine_, 8);
    const auto p = draw(n);
    const auto drops = DropSchedule::uniform(Rate(1, 10), n);
    for (MechanismId id : {MechanismId::kUniformPrice, MechanismId::kDropping,
                           MechanismId::kOmniscientSinglePrice, MechanismId::kOmniscientMultiPrice}) {
      EXPECT_EQ(admittance_of(id, p, drops), admittance(run_mechanism(id, p, drops)));
    }
  }
}

TEST_F(RandomProfiles, DroppingMechanismIsSinglePricedAndFeasible) {
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + uniform_below(engine_, 9);
    const auto p = draw(n);
    const Outcome o = run_astar(p, DropSchedule::uniform(Rate(1, 10), n));
    EXPECT_LE(o.total_rate(), 1);
    if (o.size() > 0) {
      EXPECT_TRUE(o.uniform_rate().has_value());
    }
    for (const auto& g : o.grants()) EXPECT_GE(g.rate, p[g.user]);
  }
}

}  // namespace
}  // namespace admission
