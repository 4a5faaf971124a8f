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

#ifndef ADMISSION_OUTCOME_HPP_
#define ADMISSION_OUTCOME_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "admission/rate.hpp"

namespace admission {

// A deterministic admission decision: the admitted users (0-based, ascending)
// and the service rate each one is assigned.
class Outcome {
 public:
  struct Grant {
    std::size_t user;
    Rate rate;
    friend bool operator==(const Grant&, const Grant&) = default;
  };

  Outcome() = default;
  // Grants are sorted by user; duplicate users or negative rates throw.
  explicit Outcome(std::vector<Grant> grants);

  // Every winner receives `rate`.
  static Outcome single_priced(std::vector<std::size_t> winners, const Rate& rate);

  std::span<const Grant> grants() const noexcept { return grants_; }
  std::size_t size() const noexcept { return grants_.size(); }
  bool admits(std::size_t user) const;
  std::optional<Rate> rate_of(std::size_t user) const;
  std::vector<std::size_t> winners() const;
  Rate total_rate() const;

  // The common rate when all winners are paid the same; nullopt when the
  // outcome is empty or prices differ.
  std::optional<Rate> uniform_rate() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend bool operator<(const Outcome& a, const Outcome& b);

 private:
  std::vector<Grant> grants_;
};

// Finite lottery over outcomes. Probabilities are exact, strictly positive and
// sum to exactly 1; outcomes are pairwise distinct. Entries are kept in
// canonical order (by outcome) so equal distributions compare equal.
class OutcomeDistribution {
 public:
  struct Entry {
    Outcome outcome;
    Rate probability;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit OutcomeDistribution(std::vector<Entry> entries);

  static OutcomeDistribution certain(Outcome outcome);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_deterministic() const noexcept { return entries_.size() == 1; }

  // Probability that `user` is admitted.
  Rate admission_probability(std::size_t user) const;

  friend bool operator==(const OutcomeDistribution&, const OutcomeDistribution&) = default;

 private:
  std::vector<Entry> entries_;
};

// Expected number of admitted users.
Rate admittance(const OutcomeDistribution& dist);

}  // namespace admission

#endif  // ADMISSION_OUTCOME_HPP_
