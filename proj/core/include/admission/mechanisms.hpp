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

#ifndef ADMISSION_MECHANISMS_HPP_
#define ADMISSION_MECHANISMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "admission/drop_schedule.hpp"
#include "admission/outcome.hpp"
#include "admission/profile.hpp"
#include "admission/rate.hpp"

namespace admission {

enum class MechanismId {
  kUniformPrice,  // randomized uniform-price auction (abar)
  kDropping,      // deterministic truthful refinement (astar)
  kOmniscientSinglePrice,  // F
  kOmniscientMultiPrice,   // T
};

std::string_view mechanism_name(MechanismId id);
// Accepts "abar", "astar", "f", "t" (case-insensitive). Throws InputError.
MechanismId parse_mechanism(std::string_view name);

bool is_deterministic(MechanismId id);
bool is_single_priced(MechanismId id);

// Outcomes enumerated for one boundary tie are capped here; larger tie
// groups throw InputError("tie_group_too_large").
inline constexpr std::uint64_t kMaxTieCombinations = 1u << 20;

// ---------------------------------------------------------------------------
// Uniform-price auction.

// Largest m in 1..n with m * sigma_{m+1}(t) <= 1.
std::size_t m_bar(const BidProfile& profile);

// The m_bar lowest bidders win at the lowest losing bid sigma_{m_bar+1}.
// A tie group straddling rank m_bar fills the remaining slots uniformly over
// all combinations of its members.
OutcomeDistribution run_abar_distribution(const BidProfile& profile);

// One draw from run_abar_distribution with a seeded generator.
Outcome run_abar_sampled(const BidProfile& profile, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Thresholds on the others' bids t_{-i}. Here n = others.size() + 1 and the
// sorted others use sigma_0 = 0 and sigma_n = 1.

// max{sigma_j | j * sigma_j <= 1}: the supremum of bids that can still win
// under the uniform-price auction.
Rate supremum_winning_bid(const BidProfile& others);

struct RankPair {
  std::size_t m1;  // max{j | j * sigma_j <= 1}
  std::size_t m2;  // max{j | (j + 1) * sigma_j <= 1}
  friend bool operator==(const RankPair&, const RankPair&) = default;
};

RankPair m1_m2(const BidProfile& others);

// The dropped threshold z*: equal to the supremum when m1 == m2, otherwise
// pulled towards 1/(m1+1) by d_{m1}. With no other bidders it is 1.
Rate highest_winning_bid(const BidProfile& others, const DropSchedule& drops);

// ---------------------------------------------------------------------------
// Truthful mechanism: user i wins iff t_i <= z*(t_{-i}) and is assigned
// z*(t_{-i}). `drops` must cover n users.
Outcome run_astar(const BidProfile& profile, const DropSchedule& drops);

// ---------------------------------------------------------------------------
// Omniscient baselines.

// max{m | m * sigma_m(t) <= 1}.
std::size_t m_single_price_optimum(const BidProfile& profile);
// Largest m whose m lowest bids sum to at most 1.
std::size_t m_multi_price_optimum(const BidProfile& profile);

OutcomeDistribution run_f(const BidProfile& profile);
OutcomeDistribution run_t(const BidProfile& profile);

// ---------------------------------------------------------------------------

// Uniform entry point. The dropping mechanism is returned as a point mass.
OutcomeDistribution run_mechanism(MechanismId id, const BidProfile& profile,
                                  const DropSchedule& drops = {});

// Expected number of admitted users, computed from the rank counts without
// enumerating tie combinations.
Rate admittance_of(MechanismId id, const BidProfile& profile,
                   const DropSchedule& drops = {});

}  // namespace admission

#endif  // ADMISSION_MECHANISMS_HPP_
