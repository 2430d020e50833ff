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

#ifndef IPROB_FAMILY_HPP
#define IPROB_FAMILY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "iprob/measure.hpp"
#include "iprob/partition.hpp"

namespace iprob {

// A rule H -> Y_H assigning each event a [0,1]-valued random variable that
// vanishes on H. Y_H is the uncertainty attached to valuing H; the interval
// measure of H is [P(H), P(H) + E[Y_H]].
//
// Immutable and thread-safe. Alpha families memoize alpha_i(H) behind a mutex.
class UncertaintyFamily {
 public:
  enum class Kind { kPartitionIndicator, kScaledComplement, kAlpha, kExplicit };

  // alpha(i, H) for block i of the alpha partition; must lie in [0, 1].
  using AlphaFn = std::function<Rational(std::size_t, const Event&)>;

  // Y_H = indicator of uncertainty_set(H, Z).
  static UncertaintyFamily partition_indicator(Partition z);
  // Y_H = r * indicator of H^c, 0 < r < 1.
  static UncertaintyFamily scaled_complement(SpacePtr space, Rational r);
  // Y_H = indicator(H^c) * sum_i alpha_i(H) * indicator(K_i).
  static UncertaintyFamily alpha(Partition k, AlphaFn alpha);
  // Y_H looked up by event mask. Each entry must be non-negative, vanish on its
  // event and, when `require_unit_range`, stay below 1. Missing events are
  // reported when queried.
  static UncertaintyFamily explicit_table(SpacePtr space, std::map<std::uint64_t, RandomVariable> table,
                                          bool require_unit_range = true);

  Kind kind() const;
  const SpacePtr& space() const;
  // Partition for the indicator and alpha kinds.
  const Partition* partition() const;
  // r for the scaled kind.
  std::optional<Rational> scale() const;
  Rational alpha_value(std::size_t block, const Event& h) const;

  RandomVariable value(const Event& h) const;
  // E^P[Y_H], without materializing Y_H where the kind allows.
  Rational expectation(const ProbMeasure& p, const Event& h) const;

 private:
  struct Impl;
  explicit UncertaintyFamily(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

std::string kind_name(UncertaintyFamily::Kind kind);

RandomVariable family_value(const UncertaintyFamily& y, const Event& h);

struct FamilyCheck {
  bool bounded = true;            // every Y_H takes values in [0, 1]
  bool vanishes_on_event = true;  // Y_H == 0 on H
  bool non_increasing = true;     // H subset K  =>  Y_K <= Y_H
  std::optional<Event> witness_h;
  std::optional<Event> witness_k;
  bool ok() const { return bounded && vanishes_on_event && non_increasing; }
};

// Exhaustive validation over the powerset (cap: exhaustive_outcome_cap()).
// Monotonicity is checked on covering pairs K = H + {w}, which suffices by
// transitivity.
FamilyCheck check_family(const UncertaintyFamily& y);

// First (H, K, block) with H subset K and alpha_i(H) < alpha_i(K), if any.
struct AlphaMonotonicityViolation {
  Event h;
  Event k;
  std::size_t block;
};
std::optional<AlphaMonotonicityViolation> check_alpha_monotone(const UncertaintyFamily& y);

}  // namespace iprob

#endif  // IPROB_FAMILY_HPP
