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

#ifndef ADMISSION_UTILITY_HPP_
#define ADMISSION_UTILITY_HPP_

#include <string>

#include "admission/rate.hpp"

namespace admission {

// User utility u(q, x) for true requirement q and assigned rate x. Both
// kinds vanish below q and are non-decreasing above it.
//
//   step:          u = scale                      when x >= q
//   capped_linear: u = scale * min(x / knee, 1)   when x >= q
class UtilitySpec {
 public:
  enum class Kind { kStep, kCappedLinear };

  static UtilitySpec step(const Rate& scale = Rate(1));
  // knee must lie in (0, 1].
  static UtilitySpec capped_linear(const Rate& knee, const Rate& scale = Rate(1));

  Kind kind() const noexcept { return kind_; }
  const Rate& scale() const noexcept { return scale_; }
  const Rate& knee() const noexcept { return knee_; }

  Rate operator()(const Rate& requirement, const Rate& assigned) const;

  std::string describe() const;

  friend bool operator==(const UtilitySpec&, const UtilitySpec&) = default;

 private:
  UtilitySpec(Kind kind, Rate scale, Rate knee);

  Kind kind_;
  Rate scale_;
  Rate knee_;
};

}  // namespace admission

#endif  // ADMISSION_UTILITY_HPP_
