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

#ifndef ADMISSION_VERIFIER_HPP_
#define ADMISSION_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "admission/drop_schedule.hpp"
#include "admission/mechanisms.hpp"
#include "admission/outcome.hpp"
#include "admission/profile.hpp"
#include "admission/rate.hpp"
#include "admission/utility.hpp"

namespace admission {

// Evidence for a failed property. For incentive checks every optional field
// is set, so the two payoffs can be recomputed with
// evaluate_expected_utility.
struct Counterexample {
  BidProfile profile;  // the truthful profile
  std::optional<std::size_t> user;
  std::optional<Rate> deviation;
  std::optional<UtilitySpec> utility;
  std::optional<Rate> truthful_payoff;
  std::optional<Rate> deviating_payoff;
  std::string note;
};

struct PropertyReport {
  std::string property;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> counterexample;  // the first violation found

  // Records one case; keeps the first counterexample.
  void record(bool ok, const std::function<Counterexample()>& make_counterexample);
  // Folds another report (same property, later in enumeration order) in.
  void absorb(const PropertyReport& other);
};

// Bids {0, 1/k, 2/k, ..., 1}.
class BidGrid {
 public:
  explicit BidGrid(std::size_t k);
  // "1/20" or "20". Rejects k < 1.
  static BidGrid parse(std::string_view text);

  std::size_t divisions() const noexcept { return k_; }
  Rate step() const { return Rate(1, static_cast<long>(k_)); }
  const std::vector<Rate>& points() const noexcept { return points_; }

 private:
  std::size_t k_;
  std::vector<Rate> points_;
};

enum class ProfileRestriction {
  kAll,
  kDistinctBids,  // only truthful profiles whose bids are pairwise distinct
};

enum class UtilityFamily { kStep, kCappedLinear, kBoth };

// The step utility plus one capped-linear utility per nonzero grid knee.
std::vector<UtilitySpec> utility_family(const BidGrid& grid, UtilityFamily family);

// sum over outcomes admitting `user` of u(requirement, rate) * probability.
Rate expected_utility(const OutcomeDistribution& dist, std::size_t user,
                      const Rate& requirement, const UtilitySpec& utility);

// Expected utility of a user with true requirement `true_value` who bids
// `bid` against `others`. The user is placed after the others.
Rate evaluate_expected_utility(MechanismId mech, const Rate& true_value, const Rate& bid,
                               const BidProfile& others, const UtilitySpec& utility,
                               const DropSchedule& drops = {});

// P: probabilities positive and summing to 1. CC: rates non-negative and
// summing to at most 1 in every outcome. IR: each winner's rate >= bid.
PropertyReport check_feasibility(MechanismId mech, const BidProfile& profile,
                                 const DropSchedule& drops = {});

// Every outcome pays all of its winners the same rate.
PropertyReport check_single_price(MechanismId mech, const BidProfile& profile,
                                  const DropSchedule& drops = {});

// Exhaustive deviation search on the grid: for each truthful profile (in
// lexicographic order), user, deviation and utility, truth must pay at least
// as much as the deviation.
PropertyReport brute_force_ic(MechanismId mech, const BidGrid& grid, std::size_t n,
                              std::span<const UtilitySpec> utilities,
                              const DropSchedule& drops = {},
                              ProfileRestriction restriction = ProfileRestriction::kAll);

// Admission probability never rises when a user raises its own bid.
PropertyReport check_monotonicity(MechanismId mech, const BidGrid& grid, std::size_t n,
                                  const DropSchedule& drops = {});

struct WinInterval {
  Rate threshold;  // the rate every winning grid bid received
  PropertyReport report;
};

// Scans the appended user's own bid over the grid against fixed `others`.
// Checks that winning bids form a prefix [0, z], that every win pays the same
// rate, that this rate is the analytic threshold, and that a grid bid wins
// iff it is <= that threshold. Only the deterministic mechanism qualifies;
// others throw InputError.
WinInterval extract_win_interval(MechanismId mech, const BidProfile& others,
                                 const BidGrid& grid, const DropSchedule& drops);

// floor(|T|/2) <= |Abar| and |F| - 1 <= |Abar| <= |F|, on exact admittances.
PropertyReport check_scalability(const BidProfile& profile);

// Users with equal bids are admitted together or rejected together by the
// dropping mechanism.
PropertyReport check_all_or_none(const BidProfile& profile, const DropSchedule& drops);

// Running on a permuted profile equals relabeling the original distribution.
// All n! permutations for n <= kExhaustivePermutationLimit, otherwise
// `sampled` seeded random permutations.
inline constexpr std::size_t kExhaustivePermutationLimit = 8;
PropertyReport check_permutation_equivariance(MechanismId mech, const BidProfile& profile,
                                              const DropSchedule& drops = {},
                                              std::uint64_t seed = 0,
                                              std::size_t sampled = 1000);

}  // namespace admission

#endif  // ADMISSION_VERIFIER_HPP_
