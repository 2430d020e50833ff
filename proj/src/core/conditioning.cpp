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

#include "iprob/conditioning.hpp"

#include "iprob/error.hpp"
#include "iprob/interval_measure.hpp"

namespace iprob {
namespace {

[[noreturn]] void negligible(const Event& h) {
  throw Error(ErrorCode::kPrecondition, "conditioning event " + h.str() + " is negligible: Q(H) = [0, 0]");
}

}  // namespace

Interval conditional(const ProbMeasure& p, const UncertaintyFamily& y, const Event& a, const Event& h) {
  require_same_space(p.space(), y.space());
  require_same_space(p.space(), a.space());
  require_same_space(p.space(), h.space());
  const RandomVariable given = RandomVariable::indicator(h) + y.value(h);
  const Rational denom = given.expectation(p);
  if (denom.is_zero()) negligible(h);
  const RandomVariable ia = RandomVariable::indicator(a);
  Rational lo = (ia * given).expectation(p) / denom;
  Rational hi = ((ia + y.value(a)) * given).expectation(p) / denom;
  return Interval(std::move(lo), std::move(hi));
}

Interval conditional_partition(const ProbMeasure& p, const Partition& z, const Event& a, const Event& h) {
  require_same_space(p.space(), z.space());
  require_same_space(p.space(), a.space());
  require_same_space(p.space(), h.space());
  const std::uint64_t full = z.space()->full_mask();
  const std::uint64_t s = full & ~z.psi_mask(h.mask());
  const Rational ps = p.of_mask(s);
  if (ps.is_zero()) negligible(h);
  const std::uint64_t not_psi_a = full & ~z.psi_mask(a.mask());
  return Interval(p.of_mask(a.mask() & s) / ps, p.of_mask(not_psi_a & s) / ps);
}

Interval conditional_within_blocks(const ProbMeasure& p, const Partition& z, const Event& a,
                                   const Event& h, std::size_t n, std::size_t m) {
  require_same_space(p.space(), z.space());
  require_same_space(p.space(), a.space());
  require_same_space(p.space(), h.space());
  if (z.is_cover()) throw Error(ErrorCode::kPrecondition, "closed form needs a proper partition");
  if (n >= z.block_count() || m >= z.block_count()) {
    throw Error(ErrorCode::kPrecondition, "block index out of range");
  }
  const Event& zn = z.block(n);
  const Event& zm = z.block(m);
  if (h.is_empty() || !h.subset_of(zn)) {
    throw Error(ErrorCode::kPrecondition, "H must be a non-empty subset of block " + std::to_string(n));
  }
  if (a.is_empty() || !a.subset_of(zm)) {
    throw Error(ErrorCode::kPrecondition, "A must be a non-empty subset of block " + std::to_string(m));
  }
  const Rational one(1);
  const Rational denom = p(h) + one - p(zn);
  if (denom.is_zero()) negligible(h);
  if (m != n) {
    return Interval(p(a) / denom, (denom - p(zm - a)) / denom);
  }
  const Rational pah = p(a & h);
  return Interval(pah / denom, (pah + one - p(zn)) / denom);
}

bool is_independent(const ProbMeasure& p, const UncertaintyFamily& y, const Event& a, const Event& h) {
  return conditional(p, y, a, h) == interval_measure(p, y, a);
}

Capacity Capacity::make(SpacePtr space, std::vector<Rational> values) {
  require_budget(space->size(), exhaustive_outcome_cap(), "capacity");
  const std::uint64_t full = space->full_mask();
  if (values.size() != static_cast<std::size_t>(full) + 1) {
    throw Error(ErrorCode::kValidation, "capacity must assign a value to every event");
  }
  if (!values[0].is_zero()) throw Error(ErrorCode::kValidation, "capacity of the empty event must be 0");
  if (values[full] != Rational(1)) throw Error(ErrorCode::kValidation, "capacity of the whole space must be 1");
  for (std::uint64_t h = 0; h <= full; ++h) {
    for (std::size_t i = 0; i < space->size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(h & bit) && values[h | bit] < values[h]) {
        throw Error(ErrorCode::kValidation, "capacity is not monotone at " + Event(space, h).str());
      }
    }
  }
  return Capacity(std::move(space), std::move(values));
}

Capacity Capacity::from_measure(const ProbMeasure& p) {
  const SpacePtr& space = p.space();
  require_budget(space->size(), exhaustive_outcome_cap(), "capacity");
  const std::uint64_t full = space->full_mask();
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t m = 0; m <= full; ++m) v.push_back(p.of_mask(m));
  return Capacity(space, std::move(v));
}

const Rational& Capacity::operator()(const Event& h) const {
  require_same_space(space_, h.space());
  return values_[h.mask()];
}

bool Capacity::is_superadditive() const {
  const std::uint64_t full = space_->full_mask();
  for (std::uint64_t h = 0; h <= full; ++h) {
    if (values_[h] + values_[full & ~h] > Rational(1)) return false;
  }
  return true;
}

Rational dempster_conditional(const Capacity& nu, const Event& a, const Event& h) {
  require_same_space(nu.space(), a.space());
  require_same_space(nu.space(), h.space());
  const Event hc = h.complement();
  const Rational& nu_hc = nu(hc);
  if (nu_hc == Rational(1)) throw Error(ErrorCode::kPrecondition, "capacity of the complement of H is 1");
  return (nu((a & h) | hc) - nu_hc) / (Rational(1) - nu_hc);
}

}  // namespace iprob
