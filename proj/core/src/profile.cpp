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

#include "admission/profile.hpp"

#include <algorithm>
#include <string>

#include "admission/error.hpp"

namespace admission {
namespace {

void validate_bids(const std::vector<Rate>& bids) {
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (!in_unit_interval(bids[i])) {
      throw InputError("bid_out_of_range", "bid of user " + std::to_string(i + 1) + " (" +
                                               format_rate(bids[i]) + ") is outside [0, 1]");
    }
  }
}

}  // namespace

BidProfile::BidProfile(std::vector<Rate> bids) : bids_(std::move(bids)) {
  if (bids_.empty()) throw InputError("empty_profile", "a bid profile needs at least one user");
  validate_bids(bids_);
}

BidProfile BidProfile::others(std::vector<Rate> bids) {
  validate_bids(bids);
  return BidProfile(Unchecked{}, std::move(bids));
}

BidProfile BidProfile::without(std::size_t user) const {
  std::vector<Rate> rest;
  rest.reserve(bids_.size() - 1);
  for (std::size_t i = 0; i < bids_.size(); ++i) {
    if (i != user) rest.push_back(bids_[i]);
  }
  return BidProfile(Unchecked{}, std::move(rest));
}

BidProfile BidProfile::with_bid(std::size_t user, const Rate& bid) const {
  if (!in_unit_interval(bid)) {
    throw InputError("bid_out_of_range", "replacement bid " + format_rate(bid) + " is outside [0, 1]");
  }
  std::vector<Rate> copy = bids_;
  copy.at(user) = bid;
  return BidProfile(Unchecked{}, std::move(copy));
}

bool BidProfile::all_distinct() const {
  std::vector<Rate> sorted = bids_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

BidProfile normalize_profile(std::span<const Rate> raw_bids, const Rate& capacity) {
  if (capacity <= 0) {
    throw InputError("nonpositive_capacity", "capacity must be positive, got " + format_rate(capacity));
  }
  std::vector<Rate> bids;
  bids.reserve(raw_bids.size());
  for (std::size_t i = 0; i < raw_bids.size(); ++i) {
    const Rate& raw = raw_bids[i];
    if (raw < 0) {
      throw InputError("negative_bid", "bid of user " + std::to_string(i + 1) + " is negative");
    }
    if (raw > capacity) {
      throw InputError("bid_exceeds_capacity", "bid of user " + std::to_string(i + 1) + " (" +
                                                   format_rate(raw) + ") exceeds capacity " +
                                                   format_rate(capacity));
    }
    bids.push_back(raw / capacity);
  }
  return BidProfile(std::move(bids));
}

SortedProfile::SortedProfile(const BidProfile& profile)
    : sigma_(profile.bids().begin(), profile.bids().end()) {
  std::sort(sigma_.begin(), sigma_.end());
  sigma_.emplace_back(1);
}

const Rate& SortedProfile::at(std::size_t j) const {
  static const Rate kZero{0};
  if (j == 0) return kZero;
  if (j > sigma_.size()) {
    throw InputError("sigma_index_out_of_range", "sigma index " + std::to_string(j) +
                                                     " outside 0.." + std::to_string(sigma_.size()));
  }
  return sigma_[j - 1];
}

}  // namespace admission
