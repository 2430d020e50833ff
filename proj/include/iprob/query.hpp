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

#ifndef IPROB_QUERY_HPP
#define IPROB_QUERY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iprob/scenario.hpp"

namespace iprob {

struct Query {
  std::string command;
  // Sub-command for "aggregate" (tilde, hat, delta) and "demo" (ipcc, umbrella).
  std::string mode;
  // Option name without dashes -> value, in command-line order. Repeatable
  // options (rv, event, family, partition, measure) keep every occurrence.
  std::vector<std::pair<std::string, std::string>> options;
};

struct QueryResult {
  // "interval", "event", "boolean", "rational", "report" or "table".
  std::string kind;
  std::string json;
  std::string text;
};

// Dispatches one command. The scenario may be null only for "demo". Module
// errors propagate unchanged.
QueryResult run_query(const Scenario* scenario, const Query& query);

QueryResult demo_ipcc(const std::optional<std::vector<Rational>>& weights = std::nullopt);
QueryResult demo_umbrella(const std::optional<std::vector<Rational>>& weights = std::nullopt);

// Commands understood by run_query.
const std::vector<std::string>& query_commands();

}  // namespace iprob

#endif  // IPROB_QUERY_HPP
