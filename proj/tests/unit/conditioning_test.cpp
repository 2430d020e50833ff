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

#include <bit>

#include "doctest.h"
#include "gen.hpp"
#include "iprob/complementation.hpp"
#include "iprob/conditioning.hpp"
#include "iprob/error.hpp"
#include "iprob/interval_measure.hpp"
#include "iprob/models.hpp"

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

Interval iv(long a, long b, long c, long d) { return Interval(Rational(a, b), Rational(c, d)); }

// Outcome-wise oracle: no psi_mask, no fast paths.
std::uint64_t naive_psi(std::uint64_t h, const Partition& z) {
  std::uint64_t out = 0;
  for (const Event& b : z.blocks()) {
    if (b.mask() & h) out |= b.mask() & ~h;
  }
  return out;
}

Rational naive_p(const ProbMeasure& p, std::uint64_t m) {
  Rational s;
  for (std::size_t i = 0; i < p.space()->size(); ++i) {
    if ((m >> i) & 1U) s += p.weight(i);
  }
  return s;
}

struct NaiveConditional {
  Rational lo, hi;
  bool ok = false;
};

// sum_w (1_A + Y_A)(1_H + Y_H) P(w) with Y the partition indicator, written
// outcome by outcome.
NaiveConditional naive_conditional(const ProbMeasure& p, const Partition& z, std::uint64_t a, std::uint64_t h) {
  const std::size_t n = p.space()->size();
  const std::uint64_t full = p.space()->full_mask();
  const std::uint64_t ya = full & ~(a | naive_psi(a, z));
  const std::uint64_t yh = full & ~(h | naive_psi(h, z));
  Rational d, lo, hi;
  for (std::size_t i = 0; i < n; ++i) {
    const int in_h = ((h >> i) & 1U) + ((yh >> i) & 1U);
    const int in_a = ((a >> i) & 1U);
    const int up_a = in_a + ((ya >> i) & 1U);
    d += p.weight(i) * Rational(in_h);
    lo += p.weight(i) * Rational(in_a * in_h);
    hi += p.weight(i) * Rational(up_a * in_h);
  }
  if (d.is_zero()) return {};
  return {lo / d, hi / d, true};
}

TEST_CASE("conditioning examples") {
  const UmbrellaModel u = umbrella_model();
  const auto y = UncertaintyFamily::partition_indicator(u.z);
  CHECK(conditional(u.p, y, u.w11, u.w10) == iv(5, 16, 11, 16));
  CHECK(conditional_partition(u.p, u.z, u.w11, u.w10) == iv(5, 16, 11, 16));
  for (const Event& h : all_events(u.space)) {
    if (interval_measure(u.p, y, h) == Interval::point(Rational(0))) continue;
    CHECK(conditional(u.p, y, Event::empty(u.space), h) == iv(0, 1, 1, 1));
    CHECK(conditional(u.p, y, Event::full(u.space), h) == Interval::point(Rational(1)));
    CHECK(conditional(u.p, y, psi(h, u.z).complement(), h) == Interval::point(Rational(1)));
  }

  const IpccModel m = ipcc_model();
  CHECK(conditional_partition(m.p, m.z, m.h[1], m.h[3]) == iv(1, 33, 5, 33));

  const auto s = SampleSpace::make({"a", "b", "c", "d"});
  const Partition z = Partition::from_labels(s, {{"a", "b"}, {"c", "d"}}, false);
  const ProbMeasure p = ProbMeasure::uniform(s);
  CHECK(conditional_within_blocks(p, z, Event::of(s, {"c"}), Event::of(s, {"a"}), 0, 1) == iv(1, 3, 2, 3));
  CHECK(conditional_partition(p, z, Event::of(s, {"c"}), Event::of(s, {"a"})) == iv(1, 3, 2, 3));
}

TEST_CASE("IPCC conditional table follows the cumulative-sum formula") {
  const IpccModel m = ipcc_model();
  std::vector<Rational> cum{Rational(0)};
  for (std::size_t i = 0; i < m.z.block_count(); ++i) cum.push_back(cum.back() + m.p(m.z.block(i)));
  for (std::size_t n = 0; n < m.h.size(); ++n) {
    for (std::size_t k = 0; k < m.h.size(); ++k) {
      if (k >= n) continue;
      // [sum_{i<k} P(Z_i), sum_{i<=k} P(Z_i)] / sum_{i<=n} P(Z_i)
      REQUIRE(conditional_partition(m.p, m.z, m.h[k], m.h[n]) == Interval(cum[k] / cum[n + 1], cum[k + 1] / cum[n + 1]));
    }
  }
}

TEST_CASE("blocks condition on blocks without moving") {
  testgen::Gen g(51);
  for (int rep = 0; rep < 100; ++rep) {
    const auto s = g.space(static_cast<std::size_t>(g.uniform(1, 10)));
    const Partition z = g.partition(s);
    const ProbMeasure p = g.measure(s);
    for (std::size_t a = 0; a < z.block_count(); ++a) {
      const Interval want(p(z.block(a)), Rational(1));
      REQUIRE(interval_measure(p, z, z.block(a)) == want);
      for (std::size_t h = 0; h < z.block_count(); ++h) {
        REQUIRE(conditional_partition(p, z, z.block(a), z.block(h)) == want);
        REQUIRE(conditional_within_blocks(p, z, z.block(a), z.block(h), h, a) == want);
      }
    }
  }
}

TEST_CASE("direct, partition and block forms agree with the outcome-wise oracle") {
  testgen::Gen g(52);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      const auto s = g.space(n);
      const Partition z = g.partition(s);
      const ProbMeasure p = g.measure(s, 0, 6);
      const auto y = UncertaintyFamily::partition_indicator(z);
      const std::uint64_t full = s->full_mask();
      for (std::uint64_t h = 0; h <= full; ++h) {
        const Event he(s, h);
        for (std::uint64_t a = 0; a <= full; ++a) {
          const Event ae(s, a);
          const NaiveConditional want = naive_conditional(p, z, a, h);
          if (!want.ok) {
            REQUIRE(code_of([&] { conditional(p, y, ae, he); }) == ErrorCode::kPrecondition);
            REQUIRE(code_of([&] { conditional_partition(p, z, ae, he); }) == ErrorCode::kPrecondition);
            continue;
          }
          const Interval direct = conditional(p, y, ae, he);
          REQUIRE(direct == Interval(want.lo, want.hi));
          REQUIRE(conditional_partition(p, z, ae, he) == direct);
          if (h != 0 && a != 0) {
            const std::size_t bn = z.block_of(static_cast<std::size_t>(std::countr_zero(h)));
            const std::size_t bm = z.block_of(static_cast<std::size_t>(std::countr_zero(a)));
            if (he.subset_of(z.block(bn)) && ae.subset_of(z.block(bm))) {
              REQUIRE(conditional_within_blocks(p, z, ae, he, bn, bm) == direct);
            }
          }
          // 1 - P(psi(A) | psi(H)^c)
          const std::uint64_t sm = full & ~naive_psi(h, z);
          REQUIRE(direct.hi() == Rational(1) - naive_p(p, naive_psi(a, z) & sm) / naive_p(p, sm));
        }
      }
    }
  }
}

TEST_CASE("conditioning on Omega leaves every family kind unchanged") {
  testgen::Gen g(53);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto s = g.space(n);
    const Partition z = g.partition(s);
    const ProbMeasure p = g.measure(s, 0);
    for (const auto& y : g.all_kinds(z)) {
      for (const Event& a : all_events(s)) {
        REQUIRE(conditional(p, y, a, Event::full(s)) == interval_measure(p, y, a));
      }
    }
  }
}

TEST_CASE("conditional endpoints stay ordered inside [0, 1] for every family kind") {
  testgen::Gen g(54);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto s = g.space(n);
    const Partition z = g.partition(s);
    const ProbMeasure p = g.measure(s, 0);
    for (const auto& y : g.all_kinds(z)) {
      for (const Event& h : all_events(s)) {
        if (interval_measure(p, y, h) == Interval::point(Rational(0))) {
          REQUIRE(code_of([&] { conditional(p, y, Event::full(s), h); }) == ErrorCode::kPrecondition);
          continue;
        }
        for (const Event& a : all_events(s)) conditional(p, y, a, h);  // Interval ctor checks the range
      }
    }
  }
}

TEST_CASE("when psi(H) = H^c the width is the indecisive mass of A inside H") {
  const UmbrellaModel u = umbrella_model();
  const Event h = u.w01 | u.w11;
  REQUIRE(psi(h, u.z) == h.complement());
  const Rational ph = u.p(h);
  bool literal_differs = false;
  for (const Event& a : all_events(u.space)) {
    const Interval c = conditional_partition(u.p, u.z, a, h);
    const Rational base = u.p(a & h) / ph;
    CHECK(c.lo() == base);
    CHECK(c.hi() == base + u.p(uncertainty_set(a, u.z) & h) / ph);
    CHECK(c.is_point() == (u.p(psi(a, u.z).complement() & h) == u.p(a & h)));
    // The form P(A|H) + P(psi(A)^c n H)/P(H) counts A n H twice.
    if (c.hi() != base + u.p(psi(a, u.z).complement() & h) / ph) literal_differs = true;
  }
  CHECK(literal_differs);
}

TEST_CASE("conditioning can widen an interval") {
  const UmbrellaModel u = umbrella_model();
  const Event a = u.z.block(0);
  const Interval unconditional = interval_measure(u.p, u.z, a);
  const Interval c = conditional_partition(u.p, u.z, a, u.w01);
  CHECK(unconditional == iv(1, 2, 1, 1));
  CHECK(c == iv(2, 7, 1, 1));
  CHECK(unconditional.inside(c));
  CHECK(c != unconditional);

  // The umbrella example narrows instead: [5/8, 1] inside [1/2, 1].
  const Event agree = u.w00 | u.w11;
  CHECK(conditional_partition(u.p, u.z, agree, u.w10) == iv(5, 8, 1, 1));
  CHECK(interval_measure(u.p, u.z, agree) == iv(1, 2, 1, 1));
  CHECK(conditional_partition(u.p, u.z, agree, u.w10).inside(interval_measure(u.p, u.z, agree)));
}

TEST_CASE("negligibility uses the interval of H") {
  const IpccModel m = ipcc_model();
  REQUIRE(m.p(m.h[0]).is_zero());
  CHECK(conditional_partition(m.p, m.z, m.h[0], m.h[0]) == iv(0, 1, 1, 1));

  const auto s = SampleSpace::make({"a", "b"});
  const ProbMeasure p = ProbMeasure::make(s, {Rational(1), Rational(0)});
  const Partition one = Partition::trivial(s);
  const Event b = Event::of(s, {"b"});
  CHECK(interval_measure(p, one, b) == Interval::point(Rational(0)));
  CHECK(code_of([&] { conditional_partition(p, one, b, b); }) == ErrorCode::kPrecondition);
  CHECK(code_of([&] { conditional(p, UncertaintyFamily::partition_indicator(one), b, b); }) ==
        ErrorCode::kPrecondition);
}

TEST_CASE("block closed form preconditions") {
  const UmbrellaModel u = umbrella_model();
  CHECK(code_of([&] { conditional_within_blocks(u.p, u.z, u.w11, u.w10, 1, 1); }) == ErrorCode::kPrecondition);
  CHECK(code_of([&] { conditional_within_blocks(u.p, u.z, u.w11, u.w10, 0, 0); }) == ErrorCode::kPrecondition);
  CHECK(code_of([&] { conditional_within_blocks(u.p, u.z, u.w11, u.w10, 0, 7); }) == ErrorCode::kPrecondition);
  CHECK(code_of([&] { conditional_within_blocks(u.p, u.z, Event::empty(u.space), u.w10, 0, 1); }) ==
        ErrorCode::kPrecondition);
  const Partition c = Partition::cover(u.space, {u.w01 | u.w10, u.w10 | u.w00 | u.w11});
  CHECK(code_of([&] { conditional_within_blocks(u.p, c, u.w11, u.w10, 0, 1); }) == ErrorCode::kPrecondition);
  // A = H inside one block.
  const Rational ph = u.p(u.w10);
  CHECK(conditional_within_blocks(u.p, u.z, u.w10, u.w10, 0, 0) ==
        Interval(ph / (ph + Rational(1) - u.p(u.z.block(0))), Rational(1)));
}

TEST_CASE("independence is asymmetric") {
  const auto s = SampleSpace::make({"a", "b", "c", "d"});
  const Partition z = Partition::from_labels(s, {{"a", "b"}, {"c", "d"}}, false);
  const ProbMeasure p = ProbMeasure::make(s, {Rational(1, 2), Rational(1, 4), Rational(0), Rational(1, 4)});
  const auto y = UncertaintyFamily::partition_indicator(z);
  const Event h = Event::of(s, {"a", "c"});
  CHECK(is_independent(p, y, h, z.block(0)));
  CHECK_FALSE(is_independent(p, y, z.block(0), h));
  CHECK(conditional(p, y, z.block(0), h) == Interval::point(Rational(1)));
  CHECK(interval_measure(p, y, z.block(0)) == iv(3, 4, 1, 1));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(is_independent(p, y, z.block(i), z.block(j)));
  }
}

TEST_CASE("IPCC independence pattern") {
  const IpccModel m = ipcc_model();
  const auto y = UncertaintyFamily::partition_indicator(m.z);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 0; k < n; ++k) CHECK_FALSE(is_independent(m.p, y, m.h[k], m.h[n]));
  }
  // H_6 holds every block but Z_6 in full, so it leaves nothing to condition away.
  for (std::size_t k = 0; k < 6; ++k) CHECK(is_independent(m.p, y, m.h[k], m.h[6]));

  std::vector<Event> unions{Event::empty(m.space)};
  for (std::size_t i = 0; i < m.z.block_count(); ++i) unions.push_back(unions.back() | m.z.block(i));
  for (std::size_t a = 1; a < unions.size(); ++a) {
    for (std::size_t b = 1; b < unions.size(); ++b) CHECK(is_independent(m.p, y, unions[a], unions[b]));
  }
}

TEST_CASE("capacities") {
  const auto s = SampleSpace::make({"a", "b"});
  auto make = [&](long x, long y) {
    return Capacity::make(s, {Rational(0), Rational(x, 4), Rational(y, 4), Rational(1)});
  };
  CHECK(make(1, 2).is_superadditive());
  CHECK_FALSE(make(3, 3).is_superadditive());
  CHECK(code_of([&] { make(5, 1); }) == ErrorCode::kValidation);
  CHECK(code_of([&] { Capacity::make(s, {Rational(0), Rational(1)}); }) == ErrorCode::kValidation);
  CHECK(code_of([&] { Capacity::make(s, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1)}); }) ==
        ErrorCode::kValidation);
  CHECK(code_of([&] { Capacity::make(s, {Rational(0), Rational(1, 4), Rational(1, 4), Rational(1, 2)}); }) ==
        ErrorCode::kValidation);
  CHECK(Capacity::from_measure(ProbMeasure::uniform(s)).is_superadditive());
}

TEST_CASE("Dempster rule against the interval conditional") {
  testgen::Gen g(55);
  for (int rep = 0; rep < 40; ++rep) {
    const auto s = g.space(static_cast<std::size_t>(g.uniform(1, 7)));
    const Partition z = g.partition(s);
    const ProbMeasure p = g.measure(s, 0);
    const Capacity nu = Capacity::from_measure(p);
    for (const Event& h : all_events(s)) {
      const Event sm = psi(h, z).complement();
      for (const Event& a : all_events(s)) {
        if (!p(h).is_zero()) REQUIRE(dempster_conditional(nu, a, h) == p(a & h) / p(h));
        if (!p(sm).is_zero()) {
          REQUIRE(dempster_conditional(nu, a, sm) == conditional_partition(p, z, a, h).lo());
        }
      }
      if (!p(h).is_zero()) REQUIRE(dempster_conditional(nu, Event::full(s), h) == Rational(1));
      else REQUIRE(code_of([&] { dempster_conditional(nu, Event::full(s), h); }) == ErrorCode::kPrecondition);
    }
  }
  // A non-additive capacity still gives 1 on Omega.
  const auto s = SampleSpace::make({"a", "b"});
  const Capacity nu = Capacity::make(s, {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)});
  CHECK(dempster_conditional(nu, Event::full(s), Event::of(s, {"a"})) == Rational(1));
  CHECK(dempster_conditional(nu, Event::of(s, {"a"}), Event::of(s, {"a"})) == Rational(1));
  CHECK(dempster_conditional(nu, Event::empty(s), Event::of(s, {"a"})) == Rational(0));
  CHECK(dempster_conditional(nu, Event::of(s, {"b"}), Event::of(s, {"b"})) == Rational(1));
}

}  // namespace
}  // namespace iprob
