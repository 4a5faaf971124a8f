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

#include "admission/random.hpp"

#include <numeric>
#include <utility>

namespace admission {

Engine substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Engine(seq);
}

std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  // Largest multiple of bound representable in 2^64, minus one.
  const std::uint64_t limit = bound == 0 ? 0 : (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x >= limit) return x % bound;
  }
}

Rate uniform_unit_rate(Engine& engine) { return rate_from_u64_fraction(engine()); }

BidProfile uniform_profile(Engine& engine, std::size_t n) {
  std::vector<Rate> bids;
  bids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) bids.push_back(uniform_unit_rate(engine));
  return BidProfile(std::move(bids));
}

std::vector<std::size_t> random_permutation(Engine& engine, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = uniform_below(engine, i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace admission
