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

#ifndef IPROB_SCENARIO_HPP
#define IPROB_SCENARIO_HPP

#include <map>
#include <string>
#include <string_view>

#include "iprob/family.hpp"
#include "iprob/measure.hpp"
#include "iprob/partition.hpp"

namespace iprob {

struct NamedFamily {
  UncertaintyFamily family;
  // Canonical JSON of the descriptor as read, used for rendering.
  std::string descriptor;
};

// Named objects over one sample space, read from a JSON document:
//
//   {
//     "outcomes": ["a", "b", "c"],
//     "partitions": {"Z": [["a"], ["b", "c"]], "C": [["a", "b"], ["b", "c"]], "C.cover": true},
//     "measures": {"P": {"a": "1/2", "b": "1/4", "c": "0.25"}},
//     "events": {"H": ["a", "b"]},
//     "random_variables": {"X": {"a": "0", "b": "1", "c": "2"}},
//     "families": {
//       "Y": {"kind": "partition", "partition": "Z"},
//       "S": {"kind": "scaled", "r": "1/2"},
//       "A": {"kind": "alpha", "partition": "Z", "rule": "disjoint", "weights": ["1/4", "1/2"]},
//       "E": {"kind": "explicit", "values": {"a,b": {"c": "1/3"}, "": {"a": "1", ...}}}
//     }
//   }
//
// Rationals are strings ("p/q" or exact decimals) or JSON integers; JSON
// floats are rejected. Alpha rules: "constant" gives alpha_i(H) = w_i,
// "disjoint" gives w_i when H misses block i and 0 otherwise. Explicit values
// omitted for an outcome are 0.
struct Scenario {
  SpacePtr space;
  std::map<std::string, Partition> partitions;
  std::map<std::string, ProbMeasure> measures;
  std::map<std::string, Event> events;
  std::map<std::string, RandomVariable> random_variables;
  std::map<std::string, NamedFamily> families;

  // Errors carry the offending field path, e.g. "measures.P: weights sum to
  // 11/10". Syntax errors carry line and column.
  static Scenario parse(std::string_view text);
  // Throws Error(kIo) when the file cannot be read.
  static Scenario load_file(const std::string& path);
  std::string render() const;

  // Lookups throw Error(kNotFound) naming the category.
  const Partition& partition(const std::string& name) const;
  const ProbMeasure& measure(const std::string& name) const;
  const Event& event(const std::string& name) const;
  const RandomVariable& random_variable(const std::string& name) const;
  const UncertaintyFamily& family(const std::string& name) const;

  friend bool operator==(const Scenario& a, const Scenario& b);
};

}  // namespace iprob

#endif  // IPROB_SCENARIO_HPP
