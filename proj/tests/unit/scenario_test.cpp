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

#include <string>

#include "doctest.h"
#include "iprob/error.hpp"
#include "iprob/interval_measure.hpp"
#include "iprob/models.hpp"
#include "iprob/scenario.hpp"

#ifndef IPROB_DATA_DIR
#error "IPROB_DATA_DIR must point at data/scenarios"
#endif

namespace iprob {
namespace {

std::string data(const std::string& name) { return std::string(IPROB_DATA_DIR) + "/" + name; }

// Code and message of the error thrown by parsing `text`.
std::pair<ErrorCode, std::string> parse_error(const std::string& text) {
  try {
    Scenario::parse(text);
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  FAIL("expected a parse failure for " << text);
  return {ErrorCode::kIo, ""};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

TEST_CASE("umbrella fixture matches the built-in model") {
  const Scenario sc = Scenario::load_file(data("umbrella.json"));
  const UmbrellaModel u = umbrella_model();
  CHECK(sc.space->labels() == u.space->labels());
  CHECK(sc.measure("P").weights() == u.p.weights());
  CHECK(sc.partition("Z").same_blocks(Partition::make(sc.space, {sc.event("H01") | sc.event("H10"), sc.event("Agree")})));
  CHECK(sc.partition("Zprime").block_count() == 3);
  CHECK(sc.event("Empty").is_empty());
  CHECK(sc.random_variable("Level")[3] == Rational(3));
  CHECK(interval_measure(sc.measure("P"), sc.family("Y"), sc.event("H10")) == Interval(Rational(3, 10), Rational(4, 5)));
  CHECK(interval_measure(sc.measure("P"), sc.family("Alpha"), sc.event("H10")) ==
        Interval(Rational(3, 10), Rational(11, 20)));
  CHECK(sc.family("Half").kind() == UncertaintyFamily::Kind::kScaledComplement);
}

TEST_CASE("every bundled scenario round-trips through render") {
  for (const char* name : {"umbrella.json", "ipcc.json", "asymmetry.json"}) {
    const Scenario a = Scenario::load_file(data(name));
    const Scenario b = Scenario::parse(a.render());
    CHECK(a == b);
    CHECK(b.render() == a.render());
  }
}

TEST_CASE("lookups name the category") {
  const Scenario sc = Scenario::load_file(data("umbrella.json"));
  try {
    sc.event("Nope");
    FAIL("expected kNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotFound);
    CHECK(contains(e.what(), "unknown event \"Nope\""));
  }
  CHECK_THROWS_AS(sc.family("Z"), Error);
  CHECK_THROWS_AS(sc.partition("P"), Error);
}

TEST_CASE("validation errors carry the field path") {
  const std::string head = R"({"outcomes": ["a", "b"], )";
  auto [code, msg] = parse_error(head + R"("measures": {"P": {"a": "3/5", "b": "1/2"}}})");
  CHECK(code == ErrorCode::kValidation);
  CHECK(contains(msg, "measures.P"));
  CHECK(contains(msg, "11/10"));

  std::tie(code, msg) = parse_error(head + R"("partitions": {"Z": [["a", "b"], ["b"]]}})");
  CHECK(code == ErrorCode::kValidation);
  CHECK(contains(msg, "partitions.Z"));
  // Same blocks flagged as a cover load fine.
  CHECK(Scenario::parse(head + R"("partitions": {"Z": [["a", "b"], ["b"]], "Z.cover": true}})").partition("Z").is_cover());

  std::tie(code, msg) = parse_error(head + R"("events": {"H": ["a", "zz"]}})");
  CHECK(code == ErrorCode::kNotFound);
  CHECK(contains(msg, "events.H"));

  std::tie(code, msg) = parse_error(head + R"("measures": {"P": {"a": 0.5, "b": "1/2"}}})");
  CHECK(code == ErrorCode::kParse);

  std::tie(code, msg) = parse_error(head + R"("random_variables": {"X": {"a": "1"}}})");
  CHECK(contains(msg, "random_variables.X"));

  std::tie(code, msg) = parse_error(head + R"("extra": 1})");
  CHECK(contains(msg, "extra"));

  std::tie(code, msg) = parse_error(R"({"outcomes": ["a", "a"]})");
  CHECK(code == ErrorCode::kValidation);

  std::tie(code, msg) = parse_error(head + R"("events": {"H": ["a"], "H": ["b"]}})");
  CHECK(contains(msg, "duplicate"));

  std::tie(code, msg) = parse_error(head + R"("families": {"Y": {"kind": "partition", "partition": "Q"}}})");
  CHECK(code == ErrorCode::kNotFound);
  CHECK(contains(msg, "families.Y"));

  std::tie(code, msg) = parse_error(head + R"("families": {"Y": {"kind": "wobbly"}}})");
  CHECK(contains(msg, "families.Y"));

  std::tie(code, msg) = parse_error(R"({"outcomes": ["a", )");
  CHECK(code == ErrorCode::kParse);
  CHECK(contains(msg, "malformed JSON"));
}

TEST_CASE("measure labels may be omitted and default to zero") {
  const Scenario sc = Scenario::parse(R"({"outcomes": ["a", "b", "c"], "measures": {"P": {"a": "0.25", "b": "3/4"}}})");
  CHECK(sc.measure("P").weights() == std::vector<Rational>{Rational(1, 4), Rational(3, 4), Rational(0)});
}

TEST_CASE("explicit and alpha families") {
  const Scenario sc = Scenario::parse(R"({
    "outcomes": ["a", "b"],
    "partitions": {"Z": [["a"], ["b"]]},
    "families": {
      "E": {"kind": "explicit", "values": {"": {"a": "1", "b": "1"}, "a": {"b": "1/2"}, "b": {}, "a,b": {}}},
      "C": {"kind": "alpha", "partition": "Z", "rule": "constant", "weights": ["1/3", "1/4"]}
    }
  })");
  const auto& e = sc.family("E");
  const Event a = Event::of(sc.space, {"a"});
  CHECK(e.value(a) == RandomVariable(sc.space, {Rational(0), Rational(1, 2)}));
  CHECK(sc.family("C").value(a) == RandomVariable(sc.space, {Rational(0), Rational(1, 4)}));

  auto [code, msg] = parse_error(R"({"outcomes": ["a"], "partitions": {"Z": [["a"]]},
    "families": {"C": {"kind": "alpha", "partition": "Z", "rule": "constant", "weights": ["1/3", "1/4"]}}})");
  CHECK(contains(msg, "families.C"));
}

TEST_CASE("missing files") {
  try {
    Scenario::load_file(data("does-not-exist.json"));
    FAIL("expected kIo");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace iprob
