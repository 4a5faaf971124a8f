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

#include "admission/utility.hpp"

#include "admission/error.hpp"

namespace admission {

UtilitySpec::UtilitySpec(Kind kind, Rate scale, Rate knee)
    : kind_(kind), scale_(std::move(scale)), knee_(std::move(knee)) {
  if (scale_ <= 0) throw InputError("nonpositive_scale", "utility scale must be positive");
}

UtilitySpec UtilitySpec::step(const Rate& scale) { return UtilitySpec(Kind::kStep, scale, Rate(0)); }

UtilitySpec UtilitySpec::capped_linear(const Rate& knee, const Rate& scale) {
  if (knee <= 0 || knee > 1) {
    throw InputError("knee_out_of_range", "capped-linear knee must lie in (0, 1], got " + format_rate(knee));
  }
  return UtilitySpec(Kind::kCappedLinear, scale, knee);
}

Rate UtilitySpec::operator()(const Rate& requirement, const Rate& assigned) const {
  if (assigned < requirement) return Rate(0);
  if (kind_ == Kind::kStep || assigned >= knee_) return scale_;
  return Rate(scale_ * assigned / knee_);
}

std::string UtilitySpec::describe() const {
  if (kind_ == Kind::kStep) return "step(scale=" + format_rate(scale_) + ")";
  return "capped_linear(scale=" + format_rate(scale_) + ", knee=" + format_rate(knee_) + ")";
}

}  // namespace admission
