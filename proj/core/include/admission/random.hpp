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

#ifndef ADMISSION_RANDOM_HPP_
#define ADMISSION_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "admission/profile.hpp"
#include "admission/rate.hpp"

namespace admission {

using Engine = std::mt19937_64;

// Independent generator for trial `stream` of a run seeded with `seed`.
// Results never depend on how trials are distributed across workers.
Engine substream(std::uint64_t seed, std::uint64_t stream);

// Uniform integer in [0, bound). Rejection sampling so the result depends
// only on the engine output, not on the standard library's distributions.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

// Uniform on [0, 1) with denominator 2^64.
Rate uniform_unit_rate(Engine& engine);

// n i.i.d. uniform bids.
BidProfile uniform_profile(Engine& engine, std::size_t n);

// Uniformly random permutation of 0..n-1 (Fisher-Yates).
std::vector<std::size_t> random_permutation(Engine& engine, std::size_t n);

}  // namespace admission

#endif  // ADMISSION_RANDOM_HPP_
