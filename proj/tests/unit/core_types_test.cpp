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

#include <gtest/gtest.h>

#include "admission/drop_schedule.hpp"
#include "admission/error.hpp"
#include "admission/utility.hpp"

namespace admission {
namespace {

TEST(DropSchedule, ValuesMustBeStrictlyInsideUnitInterval) {
  EXPECT_NO_THROW(DropSchedule({Rate(1, 10), Rate(9, 10)}));
  EXPECT_THROW(DropSchedule({Rate(0)}), InputError);
  EXPECT_THROW(DropSchedule({Rate(1)}), InputError);
  EXPECT_THROW(DropSchedule({Rate(1, 2), Rate(-1, 2)}), InputError);
}

TEST(DropSchedule, UniformValidatesEvenWhenEmpty) {
  EXPECT_THROW(DropSchedule::uniform(Rate(0), 2), InputError);
  EXPECT_THROW(DropSchedule::uniform(Rate(0), 1), InputError);
  const auto single = DropSchedule::uniform(Rate(1, 10), 1);
  EXPECT_EQ(single.size(), 0u);
  EXPECT_TRUE(single.covers(1));
  EXPECT_FALSE(single.covers(2));
}

TEST(DropSchedule, OneBasedAccessAndMax) {
  const DropSchedule d({Rate(1, 10), Rate(3, 10), Rate(1, 5)});
  EXPECT_EQ(d.at(1), Rate(1, 10));
  EXPECT_EQ(d.at(3), Rate(1, 5));
  EXPECT_THROW(d.at(0), InputError);
  EXPECT_THROW(d.at(4), InputError);
  EXPECT_EQ(d.max(), Rate(3, 10));
  EXPECT_EQ(DropSchedule().max(), Rate(0));
  EXPECT_TRUE(d.covers(4));
  EXPECT_FALSE(d.covers(5));
}

TEST(UtilitySpec, StepUtility) {
  const auto u = UtilitySpec::step(Rate(2));
  EXPECT_EQ(u(Rate(1, 2), Rate(2, 5)), Rate(0));
  EXPECT_EQ(u(Rate(1, 2), Rate(1, 2)), Rate(2));
  EXPECT_EQ(u(Rate(1, 2), Rate(1)), Rate(2));
}

TEST(UtilitySpec, CappedLinearUtility) {
  const auto u = UtilitySpec::capped_linear(Rate(1, 2));
  EXPECT_EQ(u(Rate(1, 5), Rate(1, 10)), Rate(0));       // below requirement
  EXPECT_EQ(u(Rate(1, 5), Rate(1, 4)), Rate(1, 2));     // linear part: x / knee
  EXPECT_EQ(u(Rate(1, 5), Rate(1, 2)), Rate(1));        // at the knee
  EXPECT_EQ(u(Rate(1, 5), Rate(9, 10)), Rate(1));       // capped
  EXPECT_THROW(UtilitySpec::capped_linear(Rate(0)), InputError);
  EXPECT_THROW(UtilitySpec::capped_linear(Rate(3, 2)), InputError);
  EXPECT_THROW(UtilitySpec::step(Rate(0)), InputError);
}

// Zero below the requirement, non-negative and non-decreasing above it.
TEST(UtilitySpecProperty, AdmissibleShape) {
  std::vector<UtilitySpec> family{UtilitySpec::step()};
  for (long k = 1; k <= 10; ++k) family.push_back(UtilitySpec::capped_linear(Rate(k, 10)));
  for (const auto& u : family) {
    for (long q = 0; q <= 20; ++q) {
      const Rate requirement(q, 20);
      Rate previous = -1;
      for (long x = 0; x <= 20; ++x) {
        const Rate assigned(x, 20);
        const Rate value = u(requirement, assigned);
        EXPECT_GE(value, 0);
        if (assigned < requirement) {
          EXPECT_EQ(value, 0) << u.describe();
        } else {
          EXPECT_GE(value, previous) << u.describe();
          previous = value;
        }
      }
    }
  }
}

}  // namespace
}  // namespace admission
