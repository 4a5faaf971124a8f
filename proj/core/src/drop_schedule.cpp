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

#include "admission/drop_schedule.hpp"

#include <algorithm>
#include <string>

#include "admission/error.hpp"

namespace admission {
namespace {

void validate_drop(const Rate& d, std::size_t j) {
  if (d <= 0 || d >= 1) {
    throw InputError("drop_out_of_range", "drop parameter d_" + std::to_string(j) + " = " +
                                              format_rate(d) + " must lie strictly inside (0, 1)");
  }
}

}  // namespace

DropSchedule::DropSchedule(std::vector<Rate> drops) : drops_(std::move(drops)) {
  for (std::size_t j = 0; j < drops_.size(); ++j) validate_drop(drops_[j], j + 1);
}

DropSchedule DropSchedule::uniform(const Rate& d, std::size_t n) {
  validate_drop(d, 1);
  return DropSchedule(std::vector<Rate>(n > 0 ? n - 1 : 0, d));
}

const Rate& DropSchedule::at(std::size_t j) const {
  if (j == 0 || j > drops_.size()) {
    throw InputError("drop_index_out_of_range", "drop schedule has no d_" + std::to_string(j) +
                                                    " (size " + std::to_string(drops_.size()) + ")");
  }
  return drops_[j - 1];
}

Rate DropSchedule::max() const {
  if (drops_.empty()) return Rate(0);
  return *std::max_element(drops_.begin(), drops_.end());
}

}  // namespace admission
