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

#ifndef ADMISSION_SERIALIZE_HPP_
#define ADMISSION_SERIALIZE_HPP_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "admission/drop_schedule.hpp"
#include "admission/experiments.hpp"
#include "admission/outcome.hpp"
#include "admission/profile.hpp"
#include "admission/rate.hpp"
#include "admission/verifier.hpp"

// JSON/CSV forms of the domain types. Users are numbered from 1 on the wire.
// Rates are decimal strings when exact in decimal, else "num/den";
// probabilities are always "num/den".
namespace admission::io {

using Json = nlohmann::ordered_json;

// {"capacity": "10", "bids": ["5", "4", "3", "4"]}
struct BidFile {
  Rate capacity;
  std::vector<Rate> raw_bids;
  BidProfile profile;  // raw_bids / capacity
};

// Throws InputError naming the offending field.
BidFile parse_bid_file(const Json& doc);
BidFile load_bid_file(const std::filesystem::path& path);

// {"drops": ["0.1", "0.2"]}
DropSchedule parse_drop_file(const Json& doc);
DropSchedule load_drop_file(const std::filesystem::path& path);

Json load_json(const std::filesystem::path& path);

Json to_json(const BidProfile& profile);
Json to_json(const Outcome& outcome);
Json to_json(const OutcomeDistribution& dist);
Json to_json(const Counterexample& cex);
Json to_json(const PropertyReport& report);
Json to_json(const DivergenceEstimate& estimate);

// header: sample,abar,astar,f,t; one row per sample, then a "mean" row.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

}  // namespace admission::io

#endif  // ADMISSION_SERIALIZE_HPP_
