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

#include "admission/experiments.hpp"

#include <cmath>
#include <string>

#include "admission/error.hpp"
#include "admission/mechanisms.hpp"
#include "admission/random.hpp"

namespace admission {

bool DivergenceEstimate::within_bound(double sigmas) const {
  return point_estimate <= to_double(analytic_bound) + sigmas * standard_error;
}

bool diverges(const BidProfile& profile, const DropSchedule& drops) {
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const BidProfile others = profile.without(i);
    const Rate& bid = profile[i];
    if (highest_winning_bid(others, drops) < bid && bid < supremum_winning_bid(others)) return true;
  }
  return false;
}

DivergenceEstimate estimate_divergence(std::size_t n, const DropSchedule& drops,
                                       std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw InputError("bad_parameter", "divergence needs n >= 1");
  if (samples < 1) throw InputError("bad_parameter", "divergence needs at least one sample");
  if (!drops.covers(n)) {
    throw InputError("drop_schedule_too_short", "drop schedule does not cover " + std::to_string(n) + " users");
  }

  DivergenceEstimate est;
  est.n = n;
  est.max_drop = drops.max();
  est.samples = samples;
  for (std::uint64_t k = 0; k < samples; ++k) {
    Engine engine = substream(seed, k);
    if (diverges(uniform_profile(engine, n), drops)) ++est.divergent;
  }
  const double p = static_cast<double>(est.divergent) / static_cast<double>(samples);
  est.point_estimate = p;
  est.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.analytic_bound = est.max_drop * static_cast<long>(n) * kUniformDensityBound;
  return est;
}

BidProfile tight_scalability_instance(std::size_t m) {
  if (m < 1) throw InputError("bad_parameter", "tight instance needs m >= 1");
  std::vector<Rate> bids(m + 1, Rate(0));
  bids.insert(bids.end(), m, Rate(1, static_cast<long>(m)));
  return BidProfile(std::move(bids));
}

BidProfile worst_case_astar_instance(std::size_t n, std::size_t m) {
  if (m < 1 || m >= n) {
    throw InputError("bad_parameter", "worst-case instance needs 1 <= m < n, got n=" +
                                          std::to_string(n) + ", m=" + std::to_string(m));
  }
  return BidProfile(std::vector<Rate>(n, Rate(1, static_cast<long>(m))));
}

SweepResult admittance_sweep(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                             const DropSchedule& drops) {
  if (n < 1) throw InputError("bad_parameter", "sweep needs n >= 1");
  if (samples < 1) throw InputError("bad_parameter", "sweep needs at least one sample");
  if (!drops.covers(n)) {
    throw InputError("drop_schedule_too_short", "drop schedule does not cover " + std::to_string(n) + " users");
  }

  SweepResult result;
  result.rows.reserve(samples);
  Rate sum_abar = 0, sum_astar = 0, sum_f = 0, sum_t = 0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    Engine engine = substream(seed, k);
    const BidProfile profile = uniform_profile(engine, n);
    SweepRow row{.sample = k,
                 .abar = admittance(run_abar_distribution(profile)),
                 .astar = Rate(static_cast<long>(run_astar(profile, drops).size())),
                 .f = admittance(run_f(profile)),
                 .t = admittance(run_t(profile))};
    sum_abar += row.abar;
    sum_astar += row.astar;
    sum_f += row.f;
    sum_t += row.t;
    result.rows.push_back(std::move(row));
  }
  const long count = static_cast<long>(samples);
  result.mean_abar = sum_abar / count;
  result.mean_astar = sum_astar / count;
  result.mean_f = sum_f / count;
  result.mean_t = sum_t / count;

  if (samples > 1) {
    const double mean = to_double(result.mean_astar);
    double ss = 0.0;
    for (const auto& row : result.rows) {
      const double dev = to_double(row.astar) - mean;
      ss += dev * dev;
    }
    result.stddev_astar = std::sqrt(ss / static_cast<double>(samples - 1));
  }
  return result;
}

}  // namespace admission
