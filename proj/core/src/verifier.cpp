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

#include "admission/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <string>

#include "admission/error.hpp"
#include "admission/random.hpp"

namespace admission {
namespace {

// A user's view of an outcome distribution: (probability, assigned rate) for
// each outcome that admits them.
using Lottery = std::vector<std::pair<Rate, Rate>>;

Lottery lottery_of(const OutcomeDistribution& dist, std::size_t user) {
  Lottery lottery;
  for (const auto& e : dist.entries()) {
    if (auto rate = e.outcome.rate_of(user)) lottery.emplace_back(e.probability, std::move(*rate));
  }
  return lottery;
}

Rate payoff(const Lottery& lottery, const Rate& requirement, const UtilitySpec& utility) {
  Rate total = 0;
  for (const auto& [probability, rate] : lottery) total += utility(requirement, rate) * probability;
  return total;
}

// All grid^n profiles, with the first user's bid most significant, so the
// table index of a profile is its lexicographic rank.
class GridTable {
 public:
  GridTable(const BidGrid& grid, std::size_t n) : points_(grid.points().size()), n_(n) {
    if (n == 0) throw InputError("empty_profile", "grid enumeration needs n >= 1");
    total_ = 1;
    for (std::size_t i = 0; i < n; ++i) total_ *= points_;
  }

  std::size_t size() const noexcept { return total_; }

  std::vector<std::size_t> digits(std::size_t index) const {
    std::vector<std::size_t> d(n_);
    for (std::size_t i = n_; i-- > 0;) {
      d[i] = index % points_;
      index /= points_;
    }
    return d;
  }

  // Index of the profile equal to `digits` except user i bids grid point s.
  std::size_t replace(std::size_t index, const std::vector<std::size_t>& digits, std::size_t user,
                      std::size_t s) const {
    std::size_t weight = 1;
    for (std::size_t i = n_; i-- > user + 1;) weight *= points_;
    return index - digits[user] * weight + s * weight;
  }

  BidProfile profile(const BidGrid& grid, const std::vector<std::size_t>& digits) const {
    std::vector<Rate> bids;
    bids.reserve(n_);
    for (std::size_t d : digits) bids.push_back(grid.points()[d]);
    return BidProfile(std::move(bids));
  }

 private:
  std::size_t points_;
  std::size_t n_;
  std::size_t total_;
};

std::vector<OutcomeDistribution> tabulate(MechanismId mech, const BidGrid& grid,
                                          const GridTable& table, const DropSchedule& drops) {
  std::vector<OutcomeDistribution> dists;
  dists.reserve(table.size());
  for (std::size_t index = 0; index < table.size(); ++index) {
    dists.push_back(run_mechanism(mech, table.profile(grid, table.digits(index)), drops));
  }
  return dists;
}

std::string property_name(std::string_view base, MechanismId mech) {
  return std::string(base) + ":" + std::string(mechanism_name(mech));
}

}  // namespace

void PropertyReport::record(bool ok, const std::function<Counterexample()>& make_counterexample) {
  ++cases;
  if (ok) return;
  ++violations;
  passed = false;
  if (!counterexample) counterexample = make_counterexample();
}

void PropertyReport::absorb(const PropertyReport& other) {
  cases += other.cases;
  violations += other.violations;
  passed = passed && other.passed;
  if (!counterexample && other.counterexample) counterexample = other.counterexample;
}

BidGrid::BidGrid(std::size_t k) : k_(k) {
  if (k < 1) throw InputError("bad_grid", "grid needs at least one division");
  points_.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    points_.emplace_back(static_cast<long>(i), static_cast<long>(k));
  }
}

BidGrid BidGrid::parse(std::string_view text) {
  std::string_view digits = text;
  if (digits.starts_with("1/")) digits.remove_prefix(2);
  std::size_t k = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || end != digits.data() + digits.size() || k < 1) {
    throw InputError("bad_grid", "grid step must look like 1/k with integer k >= 1, got \"" +
                                     std::string(text) + "\"");
  }
  return BidGrid(k);
}

std::vector<UtilitySpec> utility_family(const BidGrid& grid, UtilityFamily family) {
  std::vector<UtilitySpec> out;
  if (family != UtilityFamily::kCappedLinear) out.push_back(UtilitySpec::step());
  if (family != UtilityFamily::kStep) {
    for (const Rate& knee : grid.points()) {
      if (knee > 0) out.push_back(UtilitySpec::capped_linear(knee));
    }
  }
  return out;
}

Rate expected_utility(const OutcomeDistribution& dist, std::size_t user, const Rate& requirement,
                      const UtilitySpec& utility) {
  return payoff(lottery_of(dist, user), requirement, utility);
}

Rate evaluate_expected_utility(MechanismId mech, const Rate& true_value, const Rate& bid,
                               const BidProfile& others, const UtilitySpec& utility,
                               const DropSchedule& drops) {
  if (!in_unit_interval(true_value)) {
    throw InputError("bid_out_of_range", "true value " + format_rate(true_value) + " is outside [0, 1]");
  }
  std::vector<Rate> bids(others.bids().begin(), others.bids().end());
  bids.push_back(bid);
  const std::size_t user = others.size();
  return expected_utility(run_mechanism(mech, BidProfile(std::move(bids)), drops), user, true_value,
                          utility);
}

PropertyReport check_feasibility(MechanismId mech, const BidProfile& profile,
                                 const DropSchedule& drops) {
  PropertyReport report{.property = property_name("feasibility", mech)};
  const OutcomeDistribution dist = run_mechanism(mech, profile, drops);

  Rate total_probability = 0;
  for (const auto& e : dist.entries()) total_probability += e.probability;
  report.record(total_probability == 1, [&] {
    return Counterexample{.profile = profile,
                          .note = "P: probabilities sum to " + format_fraction(total_probability)};
  });

  for (const auto& e : dist.entries()) {
    report.record(e.probability >= 0, [&] {
      return Counterexample{.profile = profile, .note = "P: negative outcome probability"};
    });
    const Rate load = e.outcome.total_rate();
    report.record(load <= 1, [&] {
      return Counterexample{.profile = profile,
                            .note = "CC: assigned rates sum to " + format_rate(load)};
    });
    for (const auto& grant : e.outcome.grants()) {
      report.record(grant.rate >= 0, [&] {
        return Counterexample{.profile = profile, .user = grant.user,
                              .note = "CC: negative assigned rate"};
      });
      report.record(grant.rate >= profile[grant.user], [&] {
        return Counterexample{.profile = profile, .user = grant.user,
                              .note = "IR: assigned " + format_rate(grant.rate) + " below bid " +
                                      format_rate(profile[grant.user])};
      });
    }
  }
  return report;
}

PropertyReport check_single_price(MechanismId mech, const BidProfile& profile,
                                  const DropSchedule& drops) {
  PropertyReport report{.property = property_name("single-price", mech)};
  const OutcomeDistribution dist = run_mechanism(mech, profile, drops);
  for (const auto& e : dist.entries()) {
    const bool ok = e.outcome.size() == 0 || e.outcome.uniform_rate().has_value();
    report.record(ok, [&] {
      return Counterexample{.profile = profile, .note = "winners of one outcome pay different rates"};
    });
  }
  return report;
}

PropertyReport brute_force_ic(MechanismId mech, const BidGrid& grid, std::size_t n,
                              std::span<const UtilitySpec> utilities, const DropSchedule& drops,
                              ProfileRestriction restriction) {
  const std::string base = restriction == ProfileRestriction::kDistinctBids ? "weak-ic" : "ic";
  PropertyReport report{.property = property_name(base, mech)};
  const GridTable table(grid, n);
  const auto dists = tabulate(mech, grid, table, drops);
  const auto& points = grid.points();

  for (std::size_t index = 0; index < table.size(); ++index) {
    const auto digits = table.digits(index);
    const BidProfile truthful = table.profile(grid, digits);
    if (restriction == ProfileRestriction::kDistinctBids && !truthful.all_distinct()) continue;

    for (std::size_t user = 0; user < n; ++user) {
      const Rate& requirement = truthful[user];
      const Lottery honest = lottery_of(dists[index], user);
      std::vector<Rate> honest_payoff;
      honest_payoff.reserve(utilities.size());
      for (const auto& u : utilities) honest_payoff.push_back(payoff(honest, requirement, u));

      for (std::size_t s = 0; s < points.size(); ++s) {
        if (s == digits[user]) continue;
        const Lottery deviant = lottery_of(dists[table.replace(index, digits, user, s)], user);
        for (std::size_t k = 0; k < utilities.size(); ++k) {
          const Rate lie = payoff(deviant, requirement, utilities[k]);
          report.record(honest_payoff[k] >= lie, [&] {
            return Counterexample{.profile = truthful,
                                  .user = user,
                                  .deviation = points[s],
                                  .utility = utilities[k],
                                  .truthful_payoff = honest_payoff[k],
                                  .deviating_payoff = lie,
                                  .note = "deviation pays more than truth"};
          });
        }
      }
    }
  }
  return report;
}

PropertyReport check_monotonicity(MechanismId mech, const BidGrid& grid, std::size_t n,
                                  const DropSchedule& drops) {
  PropertyReport report{.property = property_name("monotonicity", mech)};
  const GridTable table(grid, n);
  const auto dists = tabulate(mech, grid, table, drops);
  const std::size_t top = grid.points().size() - 1;

  for (std::size_t index = 0; index < table.size(); ++index) {
    const auto digits = table.digits(index);
    for (std::size_t user = 0; user < n; ++user) {
      if (digits[user] == top) continue;
      // Adjacent pairs suffice: the admission probability must be
      // non-increasing along the user's own bid.
      const Rate lower = dists[index].admission_probability(user);
      const std::size_t next = table.replace(index, digits, user, digits[user] + 1);
      const Rate higher = dists[next].admission_probability(user);
      report.record(higher <= lower, [&] {
        return Counterexample{.profile = table.profile(grid, digits),
                              .user = user,
                              .deviation = grid.points()[digits[user] + 1],
                              .note = "admission probability rises from " + format_fraction(lower) +
                                      " to " + format_fraction(higher) + " on a higher bid"};
      });
    }
  }
  return report;
}

WinInterval extract_win_interval(MechanismId mech, const BidProfile& others, const BidGrid& grid,
                                 const DropSchedule& drops) {
  if (!is_deterministic(mech)) {
    throw InputError("nondeterministic_mechanism",
                     "win-interval extraction needs a deterministic mechanism, got " +
                         std::string(mechanism_name(mech)));
  }
  WinInterval result{.threshold = Rate(0), .report = {.property = "win-interval"}};
  PropertyReport& report = result.report;
  const std::size_t user = others.size();
  const Rate analytic = highest_winning_bid(others, drops);

  std::vector<Rate> bids(others.bids().begin(), others.bids().end());
  bids.emplace_back(0);
  auto profile_at = [&](const Rate& s) {
    bids.back() = s;
    return BidProfile(bids);
  };

  std::optional<Rate> observed;
  bool lost = false;
  for (const Rate& s : grid.points()) {
    const OutcomeDistribution dist = run_mechanism(mech, profile_at(s), drops);
    const auto rate = dist.entries().front().outcome.rate_of(user);
    if (rate) {
      report.record(!lost, [&] {
        return Counterexample{.profile = profile_at(s), .user = user, .deviation = s,
                              .note = "win set is not a prefix of the bid axis"};
      });
      if (!observed) observed = *rate;
      report.record(*rate == *observed, [&] {
        return Counterexample{.profile = profile_at(s), .user = user, .deviation = s,
                              .note = "assigned rate " + format_rate(*rate) +
                                      " differs from earlier wins at " + format_rate(*observed)};
      });
    } else {
      lost = true;
    }
    report.record(rate.has_value() == (s <= analytic), [&] {
      return Counterexample{.profile = profile_at(s), .user = user, .deviation = s,
                            .note = "bid " + format_rate(s) + (rate ? " wins" : " loses") +
                                    " against analytic threshold " + format_rate(analytic)};
    });
  }

  report.record(observed.has_value() && *observed == analytic, [&] {
    return Counterexample{.profile = others,
                          .note = observed ? "observed threshold " + format_rate(*observed) +
                                                 " != analytic " + format_rate(analytic)
                                           : std::string("no grid bid wins")};
  });
  result.threshold = observed.value_or(analytic);
  return result;
}

PropertyReport check_scalability(const BidProfile& profile) {
  PropertyReport report{.property = "scalability"};
  const Rate abar = admittance(run_abar_distribution(profile));
  const Rate f = admittance(run_f(profile));
  const Rate t = admittance(run_t(profile));
  const Integer half_t =
      boost::multiprecision::numerator(t) / boost::multiprecision::denominator(t) / 2;

  report.record(abar >= Rate(half_t), [&] {
    return Counterexample{.profile = profile,
                          .note = "|Abar| = " + format_rate(abar) + " < floor(|T|/2) = " + half_t.str()};
  });
  report.record(f - 1 <= abar && abar <= f, [&] {
    return Counterexample{.profile = profile,
                          .note = "|Abar| = " + format_rate(abar) + " outside [|F|-1, |F|] with |F| = " +
                                  format_rate(f)};
  });
  return report;
}

PropertyReport check_all_or_none(const BidProfile& profile, const DropSchedule& drops) {
  PropertyReport report{.property = "all-or-none"};
  const Outcome outcome = run_astar(profile, drops);
  std::map<Rate, std::pair<std::size_t, std::size_t>> groups;  // bid -> (members, admitted)
  for (std::size_t i = 0; i < profile.size(); ++i) {
    auto& [members, admitted] = groups[profile[i]];
    ++members;
    if (outcome.admits(i)) ++admitted;
  }
  for (const auto& [bid, counts] : groups) {
    const auto [members, admitted] = counts;
    report.record(admitted == 0 || admitted == members, [&] {
      return Counterexample{.profile = profile,
                            .note = std::to_string(admitted) + " of " + std::to_string(members) +
                                    " users bidding " + format_rate(bid) + " admitted"};
    });
  }
  return report;
}

PropertyReport check_permutation_equivariance(MechanismId mech, const BidProfile& profile,
                                              const DropSchedule& drops, std::uint64_t seed,
                                              std::size_t sampled) {
  PropertyReport report{.property = property_name("anonymity", mech)};
  const OutcomeDistribution base = run_mechanism(mech, profile, drops);
  const std::size_t n = profile.size();

  auto check = [&](const std::vector<std::size_t>& perm) {
    // Position k of the permuted profile holds original user perm[k].
    std::vector<Rate> bids;
    bids.reserve(n);
    for (std::size_t k = 0; k < n; ++k) bids.push_back(profile[perm[k]]);
    const BidProfile permuted(std::move(bids));
    const OutcomeDistribution moved = run_mechanism(mech, permuted, drops);

    std::vector<OutcomeDistribution::Entry> relabeled;
    for (const auto& e : moved.entries()) {
      std::vector<Outcome::Grant> grants;
      for (const auto& g : e.outcome.grants()) grants.push_back({perm[g.user], g.rate});
      relabeled.push_back({Outcome(std::move(grants)), e.probability});
    }
    report.record(OutcomeDistribution(std::move(relabeled)) == base, [&] {
      return Counterexample{.profile = permuted,
                            .note = "outcome on permuted profile is not the relabeled original"};
    });
  };

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (n <= kExhaustivePermutationLimit) {
    do {
      check(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    for (std::size_t k = 0; k < sampled; ++k) {
      Engine engine = substream(seed, k);
      check(random_permutation(engine, n));
    }
  }
  return report;
}

}  // namespace admission
