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

#include "admission/outcome.hpp"

#include <algorithm>
#include <string>

#include "admission/error.hpp"

namespace admission {

Outcome::Outcome(std::vector<Grant> grants) : grants_(std::move(grants)) {
  std::sort(grants_.begin(), grants_.end(),
            [](const Grant& a, const Grant& b) { return a.user < b.user; });
  for (std::size_t k = 0; k < grants_.size(); ++k) {
    if (k > 0 && grants_[k].user == grants_[k - 1].user) {
      throw InputError("duplicate_winner", "user " + std::to_string(grants_[k].user + 1) +
                                               " admitted twice in one outcome");
    }
    if (grants_[k].rate < 0) {
      throw InputError("negative_rate", "negative assigned rate");
    }
  }
}

Outcome Outcome::single_priced(std::vector<std::size_t> winners, const Rate& rate) {
  std::vector<Grant> grants;
  grants.reserve(winners.size());
  for (std::size_t user : winners) grants.push_back({user, rate});
  return Outcome(std::move(grants));
}

bool Outcome::admits(std::size_t user) const {
  return std::binary_search(grants_.begin(), grants_.end(), Grant{user, Rate(0)},
                            [](const Grant& a, const Grant& b) { return a.user < b.user; });
}

std::optional<Rate> Outcome::rate_of(std::size_t user) const {
  const auto it = std::lower_bound(grants_.begin(), grants_.end(), user,
                                   [](const Grant& g, std::size_t u) { return g.user < u; });
  if (it == grants_.end() || it->user != user) return std::nullopt;
  return it->rate;
}

std::vector<std::size_t> Outcome::winners() const {
  std::vector<std::size_t> users;
  users.reserve(grants_.size());
  for (const Grant& g : grants_) users.push_back(g.user);
  return users;
}

Rate Outcome::total_rate() const {
  Rate total = 0;
  for (const Grant& g : grants_) total += g.rate;
  return total;
}

std::optional<Rate> Outcome::uniform_rate() const {
  if (grants_.empty()) return std::nullopt;
  const Rate& first = grants_.front().rate;
  for (const Grant& g : grants_) {
    if (g.rate != first) return std::nullopt;
  }
  return first;
}

bool operator<(const Outcome& a, const Outcome& b) {
  return std::lexicographical_compare(
      a.grants_.begin(), a.grants_.end(), b.grants_.begin(), b.grants_.end(),
      [](const Outcome::Grant& x, const Outcome::Grant& y) {
        if (x.user != y.user) return x.user < y.user;
        return x.rate < y.rate;
      });
}

OutcomeDistribution::OutcomeDistribution(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("empty_distribution", "distribution has no outcomes");
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.outcome < b.outcome; });
  Rate total = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].probability <= 0) {
      throw InputError("nonpositive_probability", "outcome probability must be positive");
    }
    if (k > 0 && entries_[k].outcome == entries_[k - 1].outcome) {
      throw InputError("duplicate_outcome", "outcomes in a distribution must be distinct");
    }
    total += entries_[k].probability;
  }
  if (total != 1) {
    throw InputError("probabilities_not_normalized",
                     "outcome probabilities sum to " + format_fraction(total) + ", not 1");
  }
}

OutcomeDistribution OutcomeDistribution::certain(Outcome outcome) {
  return OutcomeDistribution({Entry{std::move(outcome), Rate(1)}});
}

Rate OutcomeDistribution::admission_probability(std::size_t user) const {
  Rate p = 0;
  for (const Entry& e : entries_) {
    if (e.outcome.admits(user)) p += e.probability;
  }
  return p;
}

Rate admittance(const OutcomeDistribution& dist) {
  Rate expected = 0;
  for (const auto& e : dist.entries()) expected += e.probability * static_cast<long>(e.outcome.size());
  return expected;
}

}  // namespace admission
