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

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <string>

#include "admission/error.hpp"
#include "admission/random.hpp"

namespace admission {
namespace {

std::vector<std::size_t> ascending_order(const BidProfile& profile) {
  std::vector<std::size_t> order(profile.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return profile[a] < profile[b]; });
  return order;
}

// C(n, k), or nullopt once it exceeds kMaxTieCombinations.
std::optional<std::uint64_t> bounded_binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (n - k + i) / i stays exact: c is C(n - k + i - 1, i - 1).
    c = c * (n - k + i) / i;
    if (c > kMaxTieCombinations) return std::nullopt;
  }
  return c;
}

// Admits the `count` lowest bidders. Users tied with the count-th lowest bid
// share the remaining slots uniformly over combinations.
template <typename RateFn>
OutcomeDistribution admit_lowest(const BidProfile& profile, std::size_t count, RateFn rate_for) {
  auto make_outcome = [&](const std::vector<std::size_t>& users) {
    std::vector<Outcome::Grant> grants;
    grants.reserve(users.size());
    for (std::size_t u : users) grants.push_back({u, rate_for(u)});
    return Outcome(std::move(grants));
  };

  if (count == 0) return OutcomeDistribution::certain(Outcome());

  const auto order = ascending_order(profile);
  const Rate& boundary = profile[order[count - 1]];
  std::vector<std::size_t> sure;
  std::vector<std::size_t> tied;
  for (std::size_t u = 0; u < profile.size(); ++u) {
    if (profile[u] < boundary) {
      sure.push_back(u);
    } else if (profile[u] == boundary) {
      tied.push_back(u);
    }
  }
  const std::size_t slots = count - sure.size();
  const auto combinations = bounded_binomial(tied.size(), slots);
  if (!combinations) {
    throw InputError("tie_group_too_large",
                     std::to_string(tied.size()) + " users tied for " + std::to_string(slots) +
                         " slots exceeds the enumeration limit");
  }
  const Rate probability(1, static_cast<long>(*combinations));

  std::vector<OutcomeDistribution::Entry> entries;
  entries.reserve(*combinations);
  // Lexicographic walk over index combinations of `tied`.
  std::vector<std::size_t> pick(slots);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (;;) {
    std::vector<std::size_t> users = sure;
    for (std::size_t p : pick) users.push_back(tied[p]);
    entries.push_back({make_outcome(users), probability});

    std::size_t k = slots;
    while (k > 0 && pick[k - 1] == tied.size() - slots + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < slots; ++j) pick[j] = pick[j - 1] + 1;
  }
  return OutcomeDistribution(std::move(entries));
}

struct Thresholds {
  SortedProfile sorted;
  RankPair ranks;
};

Thresholds thresholds_of(const BidProfile& others) {
  SortedProfile sorted(others);
  const std::size_t n = others.size() + 1;
  RankPair ranks{0, 0};
  for (std::size_t j = 0; j <= n; ++j) {
    const Rate& s = sorted.at(j);
    if (s * static_cast<long>(j) <= 1) ranks.m1 = j;
    if (s * static_cast<long>(j + 1) <= 1) ranks.m2 = j;
  }
  return {std::move(sorted), ranks};
}

}  // namespace

std::string_view mechanism_name(MechanismId id) {
  switch (id) {
    case MechanismId::kUniformPrice: return "abar";
    case MechanismId::kDropping: return "astar";
    case MechanismId::kOmniscientSinglePrice: return "f";
    case MechanismId::kOmniscientMultiPrice: return "t";
  }
  return "unknown";
}

MechanismId parse_mechanism(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "abar") return MechanismId::kUniformPrice;
  if (lower == "astar") return MechanismId::kDropping;
  if (lower == "f") return MechanismId::kOmniscientSinglePrice;
  if (lower == "t") return MechanismId::kOmniscientMultiPrice;
  throw InputError("unknown_mechanism", "unknown mechanism \"" + std::string(name) +
                                            "\" (expected abar, astar, f or t)");
}

bool is_deterministic(MechanismId id) { return id == MechanismId::kDropping; }

bool is_single_priced(MechanismId id) { return id != MechanismId::kOmniscientMultiPrice; }

std::size_t m_bar(const BidProfile& profile) {
  const SortedProfile sorted(profile);
  for (std::size_t m = profile.size(); m >= 1; --m) {
    if (sorted.at(m + 1) * static_cast<long>(m) <= 1) return m;
  }
  assert(false && "1 * sigma_2 <= 1 always holds");
  return 1;
}

OutcomeDistribution run_abar_distribution(const BidProfile& profile) {
  const std::size_t m = m_bar(profile);
  const Rate price = SortedProfile(profile).at(m + 1);
  return admit_lowest(profile, m, [&](std::size_t) { return price; });
}

Outcome run_abar_sampled(const BidProfile& profile, std::uint64_t seed) {
  const OutcomeDistribution dist = run_abar_distribution(profile);
  // Every entry carries the same probability 1/C, so a uniform index suffices.
  Engine engine = substream(seed, 0);
  const auto pick = uniform_below(engine, dist.size());
  return dist.entries()[pick].outcome;
}

Rate supremum_winning_bid(const BidProfile& others) {
  const SortedProfile sorted(others);
  const std::size_t n = others.size() + 1;
  Rate best = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    const Rate& s = sorted.at(j);
    if (s * static_cast<long>(j) <= 1 && s > best) best = s;
  }
  return best;
}

RankPair m1_m2(const BidProfile& others) { return thresholds_of(others).ranks; }

Rate highest_winning_bid(const BidProfile& others, const DropSchedule& drops) {
  if (others.empty()) return Rate(1);
  const auto [sorted, ranks] = thresholds_of(others);
  const Rate& supremum = sorted.at(ranks.m1);
  if (ranks.m1 == ranks.m2) return supremum;
  const Rate& d = drops.at(ranks.m1);
  return Rate(supremum * (1 - d) + d / static_cast<long>(ranks.m1 + 1));
}

Outcome run_astar(const BidProfile& profile, const DropSchedule& drops) {
  if (!drops.covers(profile.size())) {
    throw InputError("drop_schedule_too_short",
                     "drop schedule has " + std::to_string(drops.size()) + " entries; " +
                         std::to_string(profile.size()) + " users need " +
                         std::to_string(profile.size() - 1));
  }
  std::vector<Outcome::Grant> grants;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    Rate threshold = highest_winning_bid(profile.without(i), drops);
    if (profile[i] <= threshold) grants.push_back({i, std::move(threshold)});
  }
  return Outcome(std::move(grants));
}

std::size_t m_single_price_optimum(const BidProfile& profile) {
  const SortedProfile sorted(profile);
  for (std::size_t m = profile.size(); m >= 1; --m) {
    if (sorted.at(m) * static_cast<long>(m) <= 1) return m;
  }
  assert(false && "1 * sigma_1 <= 1 always holds");
  return 1;
}

std::size_t m_multi_price_optimum(const BidProfile& profile) {
  const SortedProfile sorted(profile);
  Rate total = 0;
  std::size_t m = 0;
  for (std::size_t j = 1; j <= profile.size(); ++j) {
    total += sorted.at(j);
    if (total > 1) break;
    m = j;
  }
  return m;
}

OutcomeDistribution run_f(const BidProfile& profile) {
  const std::size_t m = m_single_price_optimum(profile);
  const Rate price = SortedProfile(profile).at(m);
  return admit_lowest(profile, m, [&](std::size_t) { return price; });
}

OutcomeDistribution run_t(const BidProfile& profile) {
  const std::size_t m = m_multi_price_optimum(profile);
  return admit_lowest(profile, m, [&](std::size_t u) { return profile[u]; });
}

OutcomeDistribution run_mechanism(MechanismId id, const BidProfile& profile,
                                  const DropSchedule& drops) {
  switch (id) {
    case MechanismId::kUniformPrice: return run_abar_distribution(profile);
    case MechanismId::kDropping: return OutcomeDistribution::certain(run_astar(profile, drops));
    case MechanismId::kOmniscientSinglePrice: return run_f(profile);
    case MechanismId::kOmniscientMultiPrice: return run_t(profile);
  }
  throw InputError("unknown_mechanism", "unhandled mechanism id");
}

Rate admittance_of(MechanismId id, const BidProfile& profile, const DropSchedule& drops) {
  switch (id) {
    case MechanismId::kUniformPrice: return Rate(static_cast<long>(m_bar(profile)));
    case MechanismId::kDropping: return Rate(static_cast<long>(run_astar(profile, drops).size()));
    case MechanismId::kOmniscientSinglePrice:
      return Rate(static_cast<long>(m_single_price_optimum(profile)));
    case MechanismId::kOmniscientMultiPrice:
      return Rate(static_cast<long>(m_multi_price_optimum(profile)));
  }
  throw InputError("unknown_mechanism", "unhandled mechanism id");
}

}  // namespace admission
