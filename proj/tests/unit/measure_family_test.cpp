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

#include <atomic>
#include <thread>

#include "doctest.h"
#include "gen.hpp"
#include "iprob/complementation.hpp"
#include "iprob/error.hpp"
#include "iprob/family.hpp"
#include "iprob/measure.hpp"

namespace iprob {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an iprob::Error");
  return ErrorCode::kIo;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("probability measure validation") {
  const auto s = SampleSpace::make({"a", "b", "c"});
  CHECK(message_of([&] { ProbMeasure::make(s, {Rational(1, 2), Rational(1, 2), Rational(1, 10)}); }) ==
        "weights sum to 11/10");
  CHECK(code_of([&] { ProbMeasure::make(s, {Rational(3, 2), Rational(-1, 2), Rational(0)}); }) ==
        ErrorCode::kValidation);
  CHECK(code_of([&] { ProbMeasure::make(s, {Rational(1)}); }) == ErrorCode::kValidation);
  const ProbMeasure u = ProbMeasure::uniform(s);
  CHECK(u(Event::of(s, {"a", "c"})) == Rational(2, 3));
  CHECK(u(Event::empty(s)) == Rational(0));
  CHECK(u(Event::full(s)) == Rational(1));
  const ProbMeasure d = ProbMeasure::make(s, {Rational(1), Rational(0), Rational(0)});
  const ProbMeasure m = ProbMeasure::mix(Rational(1, 4), d, u);
  CHECK(m.weight(0) == Rational(1, 4) + Rational(3, 4) * Rational(1, 3));
  CHECK(code_of([&] { ProbMeasure::mix(Rational(2), d, u); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("measures are additive on disjoint events") {
  testgen::Gen g(31);
  for (int rep = 0; rep < 50; ++rep) {
    const auto s = g.space(static_cast<std::size_t>(g.uniform(1, 8)));
    const ProbMeasure p = g.measure(s, 0);
    const Event a = g.event(s);
    const Event b = g.event(s) - a;
    REQUIRE(p(a | b) == p(a) + p(b));
  }
}

TEST_CASE("interval validation and rendering") {
  CHECK(code_of([] { Interval(Rational(1, 2), Rational(1, 3)); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Interval(Rational(-1, 2), Rational(1, 3)); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Interval(Rational(0), Rational(3, 2)); }) == ErrorCode::kInvalidArgument);
  const Interval q(Rational(3, 10), Rational(4, 5));
  CHECK(q.str() == "[3/10, 4/5]");
  CHECK(q.percent_str() == "[30%, 80%]");
  CHECK(q.width() == Rational(1, 2));
  CHECK(Interval::point(Rational(1)).is_point());
  CHECK(Interval(Rational(1, 3), Rational(1, 2)).inside(q));
  CHECK_FALSE(q.inside(Interval(Rational(1, 3), Rational(1, 2))));
}

TEST_CASE("random variable operations") {
  const auto s = SampleSpace::make({"a", "b", "c"});
  const RandomVariable x(s, {Rational(2), Rational(-1), Rational(2)});
  CHECK(x.range() == std::vector<Rational>{Rational(-1), Rational(2)});
  CHECK(x.at_most(Rational(0)) == Event::of(s, {"b"}));
  CHECK(x.at_most(Rational(5)).is_full());
  CHECK(x.at_most(Rational(-2)).is_empty());
  CHECK(x.expectation(ProbMeasure::uniform(s)) == Rational(1));
  const RandomVariable i = RandomVariable::indicator(Event::of(s, {"a"}));
  CHECK((x * i).values() == std::vector<Rational>{Rational(2), Rational(0), Rational(0)});
  CHECK((x + i)[0] == Rational(3));
  CHECK((Rational(1, 2) * x)[1] == Rational(-1, 2));
  CHECK(RandomVariable::zero(s).pointwise_leq(RandomVariable::constant(s, Rational(1))));
  CHECK(code_of([&] { RandomVariable(s, {Rational(1)}); }) == ErrorCode::kValidation);
}

TEST_CASE("family values for each kind") {
  const auto s = SampleSpace::make({"w01", "w10", "w00", "w11"});
  const Partition z = Partition::from_labels(s, {{"w01", "w10"}, {"w00", "w11"}}, false);
  const Event h = Event::of(s, {"w10"});
  const auto ind = UncertaintyFamily::partition_indicator(z);
  CHECK(ind.value(h) == RandomVariable::indicator(Event::of(s, {"w00", "w11"})));
  const auto sc = UncertaintyFamily::scaled_complement(s, Rational(1, 2));
  CHECK(sc.value(h) == Rational(1, 2) * RandomVariable::indicator(h.complement()));
  for (const auto& y : {ind, sc}) CHECK(y.value(Event::full(s)) == RandomVariable::zero(s));
  CHECK(kind_name(ind.kind()) == "partition");
  CHECK(kind_name(sc.kind()) == "scaled");
  CHECK(*sc.scale() == Rational(1, 2));
  CHECK(code_of([&] { UncertaintyFamily::scaled_complement(s, Rational(1)); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { UncertaintyFamily::scaled_complement(s, Rational(0)); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("alpha family with block-miss weights reproduces the partition indicator") {
  testgen::Gen g(32);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto s = g.space(n);
    const Partition z = g.partition(s);
    const auto ind = UncertaintyFamily::partition_indicator(z);
    const auto alpha = UncertaintyFamily::alpha(
        z, [&z](std::size_t i, const Event& h) { return z.block(i).subset_of(h.complement()) ? Rational(1) : Rational(0); });
    const ProbMeasure p = g.measure(s);
    for (const Event& h : all_events(s)) {
      REQUIRE(alpha.value(h) == ind.value(h));
      REQUIRE(alpha.expectation(p, h) == ind.expectation(p, h));
    }
  }
}

TEST_CASE("expectation fast paths match materialised values") {
  testgen::Gen g(33);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto s = g.space(n);
    const Partition z = g.partition(s);
    const ProbMeasure p = g.measure(s, 0);
    for (const auto& y : g.all_kinds(z)) {
      for (const Event& h : all_events(s)) REQUIRE(y.expectation(p, h) == y.value(h).expectation(p));
    }
  }
}

TEST_CASE("every generated family is bounded, vanishes on its event and is non-increasing") {
  testgen::Gen g(34);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto s = g.space(n);
    for (int rep = 0; rep < 2; ++rep) {
      const Partition z = g.partition(s);
      for (const auto& y : g.all_kinds(z)) {
        const auto c = check_family(y);
        CAPTURE(kind_name(y.kind()));
        REQUIRE(c.ok());
        if (y.kind() == UncertaintyFamily::Kind::kAlpha) REQUIRE_FALSE(check_alpha_monotone(y).has_value());
      }
    }
  }
}

TEST_CASE("check_family reports an increasing family with a witness") {
  const auto s = SampleSpace::make({"a", "b"});
  std::map<std::uint64_t, RandomVariable> t;
  t.emplace(0, RandomVariable(s, {Rational(0), Rational(0)}));
  t.emplace(1, RandomVariable(s, {Rational(0), Rational(1)}));
  t.emplace(2, RandomVariable(s, {Rational(0), Rational(0)}));
  t.emplace(3, RandomVariable::zero(s));
  const auto c = check_family(UncertaintyFamily::explicit_table(s, t));
  CHECK(c.bounded);
  CHECK(c.vanishes_on_event);
  CHECK_FALSE(c.non_increasing);
  REQUIRE(c.witness_h.has_value());
  CHECK(c.witness_h->is_empty());
  CHECK(*c.witness_k == Event::of(s, {"a"}));
}

TEST_CASE("explicit family validation") {
  const auto s = SampleSpace::make({"a", "b"});
  std::map<std::uint64_t, RandomVariable> bad_support;
  bad_support.emplace(1, RandomVariable(s, {Rational(1, 2), Rational(0)}));
  CHECK(code_of([&] { UncertaintyFamily::explicit_table(s, bad_support); }) == ErrorCode::kValidation);
  std::map<std::uint64_t, RandomVariable> too_big;
  too_big.emplace(0, RandomVariable(s, {Rational(2), Rational(0)}));
  CHECK(code_of([&] { UncertaintyFamily::explicit_table(s, too_big); }) == ErrorCode::kValidation);
  CHECK_NOTHROW(UncertaintyFamily::explicit_table(s, too_big, false));
  std::map<std::uint64_t, RandomVariable> negative;
  negative.emplace(0, RandomVariable(s, {Rational(-1, 2), Rational(0)}));
  CHECK(code_of([&] { UncertaintyFamily::explicit_table(s, negative, false); }) == ErrorCode::kValidation);
  std::map<std::uint64_t, RandomVariable> partial;
  partial.emplace(0, RandomVariable::zero(s));
  const auto y = UncertaintyFamily::explicit_table(s, partial);
  CHECK(code_of([&] { y.value(Event::full(s)); }) == ErrorCode::kNotFound);
}

TEST_CASE("alpha values are range checked and monotonicity violations are found") {
  const auto s = SampleSpace::make({"a", "b", "c"});
  const Partition k = Partition::from_labels(s, {{"a"}, {"b", "c"}}, false);
  const auto out_of_range = UncertaintyFamily::alpha(k, [](std::size_t, const Event&) { return Rational(3, 2); });
  CHECK(code_of([&] { out_of_range.alpha_value(0, Event::empty(s)); }) == ErrorCode::kValidation);
  // alpha grows with H.
  const auto growing = UncertaintyFamily::alpha(
      k, [](std::size_t, const Event& h) { return Rational(static_cast<long>(h.count()), 3); });
  const auto v = check_alpha_monotone(growing);
  REQUIRE(v.has_value());
  CHECK(v->h.subset_of(v->k));
  CHECK(growing.alpha_value(v->block, v->h) < growing.alpha_value(v->block, v->k));
  CHECK(code_of([&] { UncertaintyFamily::alpha(Partition::from_labels(s, {{"a", "b"}, {"b", "c"}}, true),
                                               [](std::size_t, const Event&) { return Rational(0); }); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("families are safe to share across threads") {
  testgen::Gen g(35);
  const auto s = g.space(6);
  const Partition z = g.partition(s);
  const auto y = g.alpha_family(z);
  const ProbMeasure p = g.measure(s);
  std::vector<Rational> serial;
  for (const Event& h : all_events(s)) serial.push_back(y.expectation(p, h));
  const auto fresh = UncertaintyFamily::alpha(*y.partition(), [&y](std::size_t i, const Event& h) { return y.alpha_value(i, h); });
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (const Event& h : all_events(s)) {
        if (fresh.expectation(p, h) != serial[h.mask()]) ++mismatches;
      }
    });
  }
  for (auto& t : threads) t.join();
  CHECK(mismatches == 0);
}

}  // namespace
}  // namespace iprob
