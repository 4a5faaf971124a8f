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

#ifndef ADMISSION_EXPERIMENTS_HPP_
#define ADMISSION_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "admission/drop_schedule.hpp"
#include "admission/profile.hpp"
#include "admission/rate.hpp"

namespace admission {

// Bids are drawn i.i.d. uniform on [0, 1], so the density bound K is 1.
inline const Rate kUniformDensityBound{1};

struct DivergenceEstimate {
  std::size_t n = 0;
  Rate max_drop;  // d = max_j d_j
  std::uint64_t samples = 0;
  std::uint64_t divergent = 0;
  double point_estimate = 0.0;  // divergent / samples
  double standard_error = 0.0;  // sqrt(p (1 - p) / samples)
  Rate analytic_bound;          // d * n * K

  // point_estimate <= analytic_bound + sigmas * standard_error
  bool within_bound(double sigmas = 3.0) const;
};

// True when some user's bid lies strictly between the dropped threshold and
// the supremum winning bid, i.e. where the two mechanisms can disagree.
bool diverges(const BidProfile& profile, const DropSchedule& drops);

// Trial k draws its profile from substream(seed, k).
DivergenceEstimate estimate_divergence(std::size_t n, const DropSchedule& drops,
                                       std::uint64_t samples, std::uint64_t seed);

// m + 1 users bidding 0 and m users bidding 1/m. Requires m >= 1.
BidProfile tight_scalability_instance(std::size_t m);

// n users all bidding 1/m. Requires 1 <= m < n.
BidProfile worst_case_astar_instance(std::size_t n, std::size_t m);

struct SweepRow {
  std::uint64_t sample = 0;
  Rate abar;
  Rate astar;
  Rate f;
  Rate t;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  Rate mean_abar;
  Rate mean_astar;
  Rate mean_f;
  Rate mean_t;
  // Sample standard deviation of the per-row dropping-mechanism admittance.
  double stddev_astar = 0.0;
};

// Exact admittance of all four mechanisms on i.i.d. uniform profiles.
SweepResult admittance_sweep(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                             const DropSchedule& drops);

}  // namespace admission

#endif  // ADMISSION_EXPERIMENTS_HPP_
