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

#ifndef ADMISSION_DROP_SCHEDULE_HPP_
#define ADMISSION_DROP_SCHEDULE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "admission/rate.hpp"

namespace admission {

// Drop parameters d_1 .. d_{n-1} of the truthful mechanism, each strictly
// inside (0, 1).
class DropSchedule {
 public:
  DropSchedule() = default;
  explicit DropSchedule(std::vector<Rate> drops);

  // d_j = d for j = 1..n-1. `d` is validated even when n = 1 leaves the
  // schedule empty.
  static DropSchedule uniform(const Rate& d, std::size_t n);

  std::size_t size() const noexcept { return drops_.size(); }
  bool covers(std::size_t n) const noexcept { return n == 0 || drops_.size() + 1 >= n; }

  // 1-based. Throws InputError when j is 0 or beyond size().
  const Rate& at(std::size_t j) const;

  // max_j d_j, or 0 for an empty schedule.
  Rate max() const;

  std::span<const Rate> values() const noexcept { return drops_; }

 private:
  std::vector<Rate> drops_;
};

}  // namespace admission

#endif  // ADMISSION_DROP_SCHEDULE_HPP_
