// Copyright 2026 The iprob Authors.
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

// Command-line front end. Talks to the library only through iprob.h.

#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "iprob/iprob.h"

namespace {

int report_failure(iprob_status s) {
  std::cerr << "iprob: " << iprob_status_string(s) << ": " << iprob_last_error() << "\n";
  return 1;
}

struct ResultGuard {
  iprob_result* r = nullptr;
  ~ResultGuard() { iprob_result_free(r); }
};

struct ScenarioGuard {
  iprob_scenario* s = nullptr;
  ~ScenarioGuard() { iprob_scenario_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval probability measures on finite sample spaces"};
  app.footer(
      "Commands: measure condition independent psi uncertainty lattice-check characterize\n"
      "          prop14 (alias family-check) cdf law dominates aggregate <tilde|hat|delta>\n"
      "          demorgan demo <ipcc|umbrella> validate\n"
      "Example:  iprob measure --scenario umbrella.json --partition Z --measure P --event H10");

  std::string command;
  std::string mode;
  std::string scenario_path;
  std::vector<std::string> partitions, measures, families, events, rvs;
  std::string event_a, given, t, values, weights;
  bool as_json = false;

  app.add_option("command", command, "Command to run")->required();
  app.add_option("mode", mode, "Mode for aggregate or demo");
  app.add_option("--scenario,-s", scenario_path, "Scenario JSON file");
  app.add_option("--partition", partitions, "Partition name (repeatable for aggregate)");
  app.add_option("--measure", measures, "Measure name (repeatable for aggregate)");
  app.add_option("--family", families, "Uncertainty family name (repeatable for aggregate)");
  app.add_option("--event", events, "Event name (twice for demorgan)");
  app.add_option("--event-a", event_a, "Conditioned event");
  app.add_option("--given", given, "Conditioning event");
  app.add_option("--rv", rvs, "Random variable name (twice for dominates)");
  app.add_option("--t", t, "Threshold for cdf");
  app.add_option("--values", values, "Comma-separated values for law");
  app.add_option("--weights", weights, "Comma-separated weights for demo");
  app.add_flag("--json", as_json, "Print the result as JSON");
  CLI11_PARSE(app, argc, argv);

  ScenarioGuard scenario;
  if (!scenario_path.empty()) {
    const iprob_status s = iprob_scenario_load_file(scenario_path.c_str(), &scenario.s);
    if (s != IPROB_OK) return report_failure(s);
  }

  if (command == "validate") {
    if (!scenario.s) {
      std::cerr << "iprob: validate needs --scenario\n";
      return 1;
    }
    char* text = nullptr;
    const iprob_status s = iprob_scenario_render(scenario.s, &text);
    if (s != IPROB_OK) return report_failure(s);
    std::cout << text;
    iprob_string_free(text);
    return 0;
  }

  std::vector<std::pair<std::string, std::string>> opts;
  for (const auto& v : families) opts.emplace_back("family", v);
  for (const auto& v : partitions) opts.emplace_back("partition", v);
  for (const auto& v : measures) opts.emplace_back("measure", v);
  for (const auto& v : events) opts.emplace_back("event", v);
  for (const auto& v : rvs) opts.emplace_back("rv", v);
  if (!event_a.empty()) opts.emplace_back("event-a", event_a);
  if (!given.empty()) opts.emplace_back("given", given);
  if (!t.empty()) opts.emplace_back("t", t);
  if (!values.empty()) opts.emplace_back("values", values);
  if (!weights.empty()) opts.emplace_back("weights", weights);

  std::vector<const char*> keys, vals;
  for (const auto& [k, v] : opts) {
    keys.push_back(k.c_str());
    vals.push_back(v.c_str());
  }
  ResultGuard result;
  const iprob_status s = iprob_query(scenario.s, command.c_str(), mode.empty() ? nullptr : mode.c_str(),
                                     keys.data(), vals.data(), opts.size(), &result.r);
  if (s != IPROB_OK) return report_failure(s);
  std::cout << (as_json ? iprob_result_json(result.r) : iprob_result_text(result.r)) << "\n";
  return 0;
}
