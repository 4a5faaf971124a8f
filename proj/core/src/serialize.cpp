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

#include "admission/serialize.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "admission/error.hpp"

namespace admission::io {
namespace {

Rate rate_field(const Json& value, const std::string& field) {
  if (!value.is_string()) {
    throw InputError("malformed_field", "field \"" + field + "\" must be a decimal string");
  }
  try {
    return parse_rate(value.get<std::string>());
  } catch (const InputError& e) {
    throw InputError("malformed_field", "field \"" + field + "\": " + e.what());
  }
}

Json user_list(const std::vector<std::size_t>& users) {
  Json list = Json::array();
  for (std::size_t u : users) list.push_back(u + 1);
  return list;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("unreadable_file", "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed_json", path.string() + ": " + e.what());
  }
}

BidFile parse_bid_file(const Json& doc) {
  if (!doc.is_object()) throw InputError("malformed_json", "bid file must be a JSON object");
  if (!doc.contains("capacity")) throw InputError("missing_field", "missing field \"capacity\"");
  if (!doc.contains("bids")) throw InputError("missing_field", "missing field \"bids\"");
  const Json& bids = doc.at("bids");
  if (!bids.is_array() || bids.empty()) {
    throw InputError("malformed_field", "field \"bids\" must be a non-empty array");
  }

  BidFile file;
  file.capacity = rate_field(doc.at("capacity"), "capacity");
  for (std::size_t i = 0; i < bids.size(); ++i) {
    file.raw_bids.push_back(rate_field(bids[i], "bids[" + std::to_string(i) + "]"));
  }
  file.profile = normalize_profile(file.raw_bids, file.capacity);
  return file;
}

BidFile load_bid_file(const std::filesystem::path& path) { return parse_bid_file(load_json(path)); }

DropSchedule parse_drop_file(const Json& doc) {
  if (!doc.is_object() || !doc.contains("drops") || !doc.at("drops").is_array()) {
    throw InputError("missing_field", "drop file needs an array field \"drops\"");
  }
  std::vector<Rate> drops;
  const Json& list = doc.at("drops");
  for (std::size_t j = 0; j < list.size(); ++j) {
    drops.push_back(rate_field(list[j], "drops[" + std::to_string(j) + "]"));
  }
  return DropSchedule(std::move(drops));
}

DropSchedule load_drop_file(const std::filesystem::path& path) {
  return parse_drop_file(load_json(path));
}

Json to_json(const BidProfile& profile) {
  Json bids = Json::array();
  for (const Rate& b : profile.bids()) bids.push_back(format_rate(b));
  return bids;
}

Json to_json(const Outcome& outcome) {
  Json j;
  j["winners"] = user_list(outcome.winners());
  if (auto rate = outcome.uniform_rate()) j["rate"] = format_rate(*rate);
  Json rates = Json::object();
  for (const auto& g : outcome.grants()) rates[std::to_string(g.user + 1)] = format_rate(g.rate);
  j["rates"] = std::move(rates);
  return j;
}

Json to_json(const OutcomeDistribution& dist) {
  Json list = Json::array();
  for (const auto& e : dist.entries()) {
    Json entry;
    entry["probability"] = format_fraction(e.probability);
    const Json outcome = to_json(e.outcome);
    for (const auto& [key, value] : outcome.items()) entry[key] = value;
    list.push_back(std::move(entry));
  }
  return list;
}

Json to_json(const Counterexample& cex) {
  Json j;
  j["profile"] = to_json(cex.profile);
  if (cex.user) j["user"] = *cex.user + 1;
  if (cex.deviation) j["deviation"] = format_rate(*cex.deviation);
  if (cex.utility) j["utility"] = cex.utility->describe();
  if (cex.truthful_payoff) j["truthful_payoff"] = format_rate(*cex.truthful_payoff);
  if (cex.deviating_payoff) j["deviating_payoff"] = format_rate(*cex.deviating_payoff);
  if (!cex.note.empty()) j["note"] = cex.note;
  return j;
}

Json to_json(const PropertyReport& report) {
  Json j;
  j["property"] = report.property;
  j["passed"] = report.passed;
  j["cases"] = report.cases;
  j["violations"] = report.violations;
  j["counterexample"] = report.counterexample ? to_json(*report.counterexample) : Json(nullptr);
  return j;
}

Json to_json(const DivergenceEstimate& estimate) {
  Json j;
  j["n"] = estimate.n;
  j["max_drop"] = format_rate(estimate.max_drop);
  j["samples"] = estimate.samples;
  j["divergent"] = estimate.divergent;
  j["point_estimate"] = estimate.point_estimate;
  j["standard_error"] = estimate.standard_error;
  j["density_bound"] = format_rate(kUniformDensityBound);
  j["analytic_bound"] = format_rate(estimate.analytic_bound);
  j["within_bound"] = estimate.within_bound();
  return j;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "sample,abar,astar,f,t\n";
  for (const auto& row : sweep.rows) {
    out << row.sample << ',' << format_rate(row.abar) << ',' << format_rate(row.astar) << ','
        << format_rate(row.f) << ',' << format_rate(row.t) << '\n';
  }
  out << "mean," << format_rate(sweep.mean_abar) << ',' << format_rate(sweep.mean_astar) << ','
      << format_rate(sweep.mean_f) << ',' << format_rate(sweep.mean_t) << '\n';
}

}  // namespace admission::io
