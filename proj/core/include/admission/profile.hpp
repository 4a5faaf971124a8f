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

#ifndef ADMISSION_PROFILE_HPP_
#define ADMISSION_PROFILE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "admission/rate.hpp"

namespace admission {

// Normalized bids of users 0..n-1, each in [0, 1]. A profile may be empty
// only when it represents the others' bids t_{-i} of a single-user auction;
// use BidProfile::others() for that.
class BidProfile {
 public:
  BidProfile() = default;

  // Requires n >= 1 and every bid in [0, 1].
  explicit BidProfile(std::vector<Rate> bids);

  // Same validation, but allows an empty list.
  static BidProfile others(std::vector<Rate> bids);

  std::size_t size() const noexcept { return bids_.size(); }
  bool empty() const noexcept { return bids_.empty(); }
  const Rate& operator[](std::size_t i) const { return bids_[i]; }
  std::span<const Rate> bids() const noexcept { return bids_; }

  // t_{-i}: the profile with user i removed.
  BidProfile without(std::size_t user) const;

  // (t_{-i}, s): user i's bid replaced by `bid`.
  BidProfile with_bid(std::size_t user, const Rate& bid) const;

  // True when no two users bid the same value.
  bool all_distinct() const;

  friend bool operator==(const BidProfile&, const BidProfile&) = default;

 private:
  struct Unchecked {};
  BidProfile(Unchecked, std::vector<Rate> bids) : bids_(std::move(bids)) {}

  std::vector<Rate> bids_;
};

// Divides raw requested rates by the capacity. Rejects capacity <= 0,
// negative bids and bids above the capacity (naming the offending index).
BidProfile normalize_profile(std::span<const Rate> raw_bids, const Rate& capacity);

// Sorted bids with the pseudo-bidder 1 appended. Only the multiset of bids
// survives; indices are dropped.
class SortedProfile {
 public:
  explicit SortedProfile(const BidProfile& profile);

  std::size_t source_len() const noexcept { return sigma_.size() - 1; }

  // sigma_0 = 0, sigma_j for 1 <= j <= source_len + 1 (the last being the
  // pseudo-bid 1). Throws InputError outside 0..source_len+1.
  const Rate& at(std::size_t j) const;

  // sigma_1 .. sigma_{source_len+1}.
  std::span<const Rate> sigma() const noexcept { return sigma_; }

 private:
  std::vector<Rate> sigma_;
};

inline SortedProfile sort_with_pseudo(const BidProfile& profile) {
  return SortedProfile(profile);
}

inline const Rate& sigma_at(const SortedProfile& sorted, std::size_t j) {
  return sorted.at(j);
}

}  // namespace admission

#endif  // ADMISSION_PROFILE_HPP_
