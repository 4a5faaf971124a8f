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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "admission/error.hpp"
#include "admission/experiments.hpp"
#include "admission/mechanisms.hpp"
#include "admission/random.hpp"
#include "admission/serialize.hpp"
#include "admission/verifier.hpp"

namespace {

using namespace admission;
using io::Json;

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;

// Drop schedule given either as a scalar applied to every j or as a file.
struct DropSource {
  std::string scalar;
  std::string file;

  bool given() const { return !scalar.empty() || !file.empty(); }

  DropSchedule resolve(std::size_t n) const {
    if (!file.empty()) {
      DropSchedule drops = io::load_drop_file(file);
      if (!drops.covers(n)) {
        throw InputError("drop_schedule_too_short",
                         "drop file has " + std::to_string(drops.size()) + " values, need " +
                             std::to_string(n > 0 ? n - 1 : 0));
      }
      return drops;
    }
    return DropSchedule::uniform(parse_rate(scalar), n);
  }
};

void add_drop_options(CLI::App* cmd, DropSource& drops) {
  auto* scalar = cmd->add_option("--drop", drops.scalar, "drop d_j applied to every j, in (0,1)");
  auto* file = cmd->add_option("--drop-file", drops.file, "JSON file {\"drops\": [...]}");
  scalar->excludes(file);
}

DropSchedule drops_for(MechanismId mech, const DropSource& source, std::size_t n) {
  if (source.given()) return source.resolve(n);
  if (mech == MechanismId::kDropping && n > 1) {
    throw InputError("missing_drop_schedule", "astar needs --drop or --drop-file");
  }
  return DropSchedule();
}

BidGrid parse_cli_grid(const std::string& text) {
  BidGrid grid = BidGrid::parse(text);
  if (grid.divisions() < 2) throw InputError("bad_grid", "grid step must be 1/k with k >= 2");
  return grid;
}

void emit(const Json& doc, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << doc.dump() << '\n';
    return;
  }
  std::ofstream out(output);
  if (!out) throw InputError("unwritable_file", "cannot write " + output);
  out << doc.dump(2) << '\n';
}

// --- run ---------------------------------------------------------------------

struct RunOptions {
  std::string mech;
  std::string bids;
  DropSource drops;
  std::optional<std::uint64_t> sample_seed;
  std::string format = "json";
};

int cmd_run(const RunOptions& opt) {
  const MechanismId mech = parse_mechanism(opt.mech);
  const io::BidFile file = io::load_bid_file(opt.bids);
  const BidProfile& profile = file.profile;
  const DropSchedule drops = drops_for(mech, opt.drops, profile.size());

  OutcomeDistribution dist = OutcomeDistribution::certain(Outcome());
  if (opt.sample_seed) {
    if (mech != MechanismId::kUniformPrice) {
      throw InputError("bad_option", "--sample applies only to abar");
    }
    dist = OutcomeDistribution::certain(run_abar_sampled(profile, *opt.sample_seed));
  } else {
    dist = run_mechanism(mech, profile, drops);
  }

  if (opt.format == "csv") {
    std::cout << "probability,winners,rates\n";
    for (const auto& e : dist.entries()) {
      std::string winners;
      std::string rates;
      for (const auto& g : e.outcome.grants()) {
        winners += (winners.empty() ? "" : " ") + std::to_string(g.user + 1);
        rates += (rates.empty() ? "" : " ") + format_rate(g.rate);
      }
      std::cout << format_fraction(e.probability) << ',' << winners << ',' << rates << '\n';
    }
    return kOk;
  }

  Json doc;
  doc["mechanism"] = mechanism_name(mech);
  doc["profile"] = io::to_json(profile);
  if (dist.is_deterministic()) {
    doc["outcome"] = io::to_json(dist.entries().front().outcome);
  } else {
    doc["distribution"] = io::to_json(dist);
  }
  if (!opt.sample_seed) doc["admittance"] = format_rate(admittance(dist));
  std::cout << doc.dump() << '\n';
  return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  std::string mech = "astar";
  std::size_t n = 3;
  std::string grid = "1/20";
  DropSource drops;
  bool expect_fail = false;
  std::optional<std::uint64_t> random;
  std::uint64_t seed = 0;
  std::string bids;
  std::string utility = "both";
};

UtilityFamily parse_family(const std::string& name) {
  if (name == "step") return UtilityFamily::kStep;
  if (name == "capped") return UtilityFamily::kCappedLinear;
  if (name == "both") return UtilityFamily::kBoth;
  throw InputError("unknown_utility", "utility must be step, capped or both, got \"" + name + "\"");
}

// Profiles for suites that act on individual profiles: the bid file, or
// --random R profiles of size n drawn from substream(seed, k).
template <typename Check>
PropertyReport over_profiles(const VerifyOptions& opt, const std::string& property, Check check) {
  if (!opt.bids.empty() && opt.random) {
    throw InputError("bad_option", "--bids and --random are mutually exclusive");
  }
  if (!opt.bids.empty()) return check(io::load_bid_file(opt.bids).profile);
  if (!opt.random) throw InputError("bad_option", "suite " + opt.suite + " needs --bids or --random");
  if (opt.n < 1) throw InputError("bad_option", "--n must be at least 1");
  PropertyReport total;
  total.property = property;
  for (std::uint64_t k = 0; k < *opt.random; ++k) {
    Engine engine = substream(opt.seed, k);
    total.absorb(check(uniform_profile(engine, opt.n)));
  }
  return total;
}

PropertyReport run_suite(const VerifyOptions& opt) {
  const std::string& s = opt.suite;
  if (s == "scalability") {
    return over_profiles(opt, "scalability", [](const BidProfile& p) { return check_scalability(p); });
  }
  if (s == "all-or-none") {
    return over_profiles(opt, "all-or-none", [&](const BidProfile& p) {
      return check_all_or_none(p, drops_for(MechanismId::kDropping, opt.drops, p.size()));
    });
  }

  const MechanismId mech = parse_mechanism(opt.mech);
  if (s == "feasibility") {
    return over_profiles(opt, "feasibility", [&](const BidProfile& p) {
      return check_feasibility(mech, p, drops_for(mech, opt.drops, p.size()));
    });
  }
  if (s == "anonymity") {
    return over_profiles(opt, "anonymity", [&](const BidProfile& p) {
      return check_permutation_equivariance(mech, p, drops_for(mech, opt.drops, p.size()), opt.seed);
    });
  }
  if (s == "ic" || s == "weak-ic") {
    const BidGrid grid = parse_cli_grid(opt.grid);
    const auto family = utility_family(grid, parse_family(opt.utility));
    const auto restriction = s == "ic" ? ProfileRestriction::kAll : ProfileRestriction::kDistinctBids;
    return brute_force_ic(mech, grid, opt.n, family, drops_for(mech, opt.drops, opt.n), restriction);
  }
  if (s == "monotonicity") {
    return check_monotonicity(mech, parse_cli_grid(opt.grid), opt.n, drops_for(mech, opt.drops, opt.n));
  }
  if (s == "win-interval") {
    const BidGrid grid = parse_cli_grid(opt.grid);
    // Here the bid file or the random draw supplies the other users' bids.
    auto scan = [&](const BidProfile& rest) {
      const std::size_t n = rest.size() + 1;
      return extract_win_interval(mech, rest, grid, drops_for(mech, opt.drops, n)).report;
    };
    if (!opt.bids.empty()) {
      const BidProfile p = io::load_bid_file(opt.bids).profile;
      return scan(BidProfile::others(std::vector<Rate>(p.bids().begin(), p.bids().end())));
    }
    if (!opt.random) throw InputError("bad_option", "suite win-interval needs --bids or --random");
    if (opt.n < 1) throw InputError("bad_option", "--n must be at least 1");
    PropertyReport total;
    total.property = "win-interval";
    for (std::uint64_t k = 0; k < *opt.random; ++k) {
      Engine engine = substream(opt.seed, k);
      std::vector<Rate> rest;
      for (std::size_t i = 0; i + 1 < opt.n; ++i) rest.push_back(uniform_unit_rate(engine));
      total.absorb(scan(BidProfile::others(std::move(rest))));
    }
    return total;
  }
  throw InputError("unknown_suite", "unknown suite \"" + s + "\"");
}

int cmd_verify(const VerifyOptions& opt) {
  const PropertyReport report = run_suite(opt);
  Json line = io::to_json(report);
  line["expected"] = opt.expect_fail ? "fail" : "pass";
  std::cout << line.dump() << '\n';
  return report.passed != opt.expect_fail ? kOk : kPropertyFailed;
}

// --- experiment --------------------------------------------------------------

struct ExperimentOptions {
  std::string name;
  std::size_t n = 4;
  std::size_t m = 2;
  std::string d = "0.1";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
};

Json admittance_report(const BidProfile& profile, const DropSchedule& drops) {
  Json j;
  j["abar"] = format_rate(admittance_of(MechanismId::kUniformPrice, profile));
  j["astar"] = format_rate(admittance_of(MechanismId::kDropping, profile, drops));
  j["f"] = format_rate(admittance_of(MechanismId::kOmniscientSinglePrice, profile));
  j["t"] = format_rate(admittance_of(MechanismId::kOmniscientMultiPrice, profile));
  return j;
}

int cmd_experiment(const ExperimentOptions& opt) {
  const Rate d = parse_rate(opt.d);

  if (opt.name == "divergence") {
    const auto est = estimate_divergence(opt.n, DropSchedule::uniform(d, opt.n), opt.samples, opt.seed);
    Json doc;
    doc["experiment"] = "divergence";
    doc["seed"] = opt.seed;
    const Json summary = io::to_json(est);
    for (const auto& [key, value] : summary.items()) doc[key] = value;
    emit(doc, opt.output);
    return est.within_bound() ? kOk : kPropertyFailed;
  }

  if (opt.name == "sweep") {
    const auto sweep = admittance_sweep(opt.n, opt.samples, opt.seed, DropSchedule::uniform(d, opt.n));
    if (opt.format == "csv") {
      std::ostringstream csv;
      io::write_sweep_csv(csv, sweep);
      if (opt.output.empty() || opt.output == "-") {
        std::cout << csv.str();
      } else {
        std::ofstream out(opt.output);
        if (!out) throw InputError("unwritable_file", "cannot write " + opt.output);
        out << csv.str();
      }
      return kOk;
    }
    Json doc;
    doc["experiment"] = "sweep";
    doc["n"] = opt.n;
    doc["samples"] = opt.samples;
    doc["seed"] = opt.seed;
    doc["mean"] = {{"abar", format_rate(sweep.mean_abar)},
                   {"astar", format_rate(sweep.mean_astar)},
                   {"f", format_rate(sweep.mean_f)},
                   {"t", format_rate(sweep.mean_t)}};
    doc["stddev_astar"] = sweep.stddev_astar;
    emit(doc, opt.output);
    return kOk;
  }

  if (opt.name == "tight-instance") {
    const BidProfile p = tight_scalability_instance(opt.m);
    const Json adm = admittance_report(p, DropSchedule::uniform(d, p.size()));
    const Rate abar = admittance_of(MechanismId::kUniformPrice, p);
    const Rate t = admittance_of(MechanismId::kOmniscientMultiPrice, p);
    const bool tight = abar == static_cast<long>(opt.m) && t == static_cast<long>(2 * opt.m + 1);
    Json doc;
    doc["experiment"] = "tight-instance";
    doc["m"] = opt.m;
    doc["profile"] = io::to_json(p);
    doc["admittance"] = adm;
    doc["tight"] = tight;
    emit(doc, opt.output);
    return tight ? kOk : kPropertyFailed;
  }

  if (opt.name == "worst-case") {
    const BidProfile p = worst_case_astar_instance(opt.n, opt.m);
    const DropSchedule drops = DropSchedule::uniform(d, p.size());
    const Json adm = admittance_report(p, drops);
    const bool worst = admittance_of(MechanismId::kDropping, p, drops) == 0 &&
                       admittance_of(MechanismId::kOmniscientSinglePrice, p) == static_cast<long>(opt.m);
    Json doc;
    doc["experiment"] = "worst-case";
    doc["n"] = opt.n;
    doc["m"] = opt.m;
    doc["drop"] = format_rate(d);
    doc["profile"] = io::to_json(p);
    doc["admittance"] = adm;
    doc["astar_admits_none"] = worst;
    emit(doc, opt.output);
    return worst ? kOk : kPropertyFailed;
  }

  throw InputError("unknown_experiment", "unknown experiment \"" + opt.name + "\"");
}

void fail_line(const std::string& reason, const std::string& message) {
  std::string flat = message;
  for (char& c : flat) {
    if (c == '\n') c = ' ';
  }
  std::cerr << "error: " << reason << ": " << flat << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truthful admission-control auctions"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run a mechanism on a bid file");
  run_cmd->add_option("--mech", run.mech, "abar, astar, f or t")->required();
  run_cmd->add_option("--bids", run.bids, "bid file")->required();
  add_drop_options(run_cmd, run.drops);
  run_cmd->add_option("--sample", run.sample_seed, "draw one abar outcome with this seed");
  run_cmd->add_option("--format", run.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("--suite", verify.suite)->required();
  verify_cmd->add_option("--mech", verify.mech);
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--grid", verify.grid, "1/k");
  add_drop_options(verify_cmd, verify.drops);
  verify_cmd->add_flag("--expect-fail", verify.expect_fail);
  verify_cmd->add_option("--random", verify.random, "number of random profiles");
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--bids", verify.bids);
  verify_cmd->add_option("--utility", verify.utility, "step, capped or both");

  ExperimentOptions experiment;
  auto* exp_cmd = app.add_subcommand("experiment", "run an experiment");
  exp_cmd->add_option("name", experiment.name, "divergence, sweep, tight-instance or worst-case")->required();
  exp_cmd->add_option("--n", experiment.n);
  exp_cmd->add_option("--m", experiment.m);
  exp_cmd->add_option("--d", experiment.d);
  exp_cmd->add_option("--samples", experiment.samples);
  exp_cmd->add_option("--seed", experiment.seed);
  exp_cmd->add_option("--format", experiment.format)->check(CLI::IsMember({"json", "csv"}));
  exp_cmd->add_option("--output", experiment.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail_line("usage", e.what());
    return kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*verify_cmd) return cmd_verify(verify);
    return cmd_experiment(experiment);
  } catch (const InputError& e) {
    fail_line(e.reason(), e.what());
    return kUsage;
  } catch (const std::exception& e) {
    fail_line("internal", e.what());
    return kUsage;
  }
}
