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

#ifndef IPROB_INTERVAL_MEASURE_HPP
#define IPROB_INTERVAL_MEASURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "iprob/family.hpp"
#include "iprob/measure.hpp"
#include "iprob/partition.hpp"

namespace iprob {

// [P(H), P(H) + E^P[Y_H]]
Interval interval_measure(const ProbMeasure& p, const UncertaintyFamily& y, const Event& h);

// Shorthand for the partition-indicator family: [P(H), 1 - P(psi(H))].
Interval interval_measure(const ProbMeasure& p, const Partition& z, const Event& h);

// An interval for every event of a small space, indexed by event mask.
class IntervalMeasureTable {
 public:
  // `entries` must hold exactly 2^N intervals.
  IntervalMeasureTable(SpacePtr space, std::vector<Interval> entries);
  // Throws Error(kValidation) when some event is missing.
  static IntervalMeasureTable from_entries(SpacePtr space,
                                           const std::vector<std::pair<Event, Interval>>& entries);

  const SpacePtr& space() const { return space_; }
  const std::vector<Interval>& entries() const { return entries_; }
  const Interval& operator()(const Event& h) const;
  const Interval& at(std::uint64_t mask) const { return entries_.at(mask); }
  Rational width(std::uint64_t mask) const { return entries_.at(mask).width(); }

  // Lower endpoints of the singletons as weights. Throws Error(kValidation)
  // when they do not sum to 1.
  ProbMeasure lower_measure() const;

  friend bool operator==(const IntervalMeasureTable& a, const IntervalMeasureTable& b) {
    return same_space(a.space_, b.space_) && a.entries_ == b.entries_;
  }

 private:
  SpacePtr space_;
  std::vector<Interval> entries_;
};

IntervalMeasureTable build_table(const ProbMeasure& p, const UncertaintyFamily& y);

struct TableAxiomReport {
  bool lower_is_probability = true;  // lower endpoints additive, lo(Omega) = 1
  bool width_antitone = true;        // H subset K  =>  |Q(K)| <= |Q(H)|
  std::optional<std::pair<Event, Event>> witness;
  bool ok() const { return lower_is_probability && width_antitone; }
};

TableAxiomReport check_table_axioms(const IntervalMeasureTable& q);

struct PartitionForm {
  ProbMeasure measure;
  Partition partition;
  // Set when some recovered block carries zero mass; such blocks cannot be
  // told apart from the table, so the partition is one of several.
  bool non_unique = false;
};

// Decides whether q is the interval measure of some (P, partition indicator)
// pair and recovers both. The distinguished events are the empty set plus
// every H with Q(H) = [a, 1] and Q(H^c) = [1 - a, 1]; they must form a
// subalgebra whose atoms satisfy the block conditions. The candidate is
// confirmed by rebuilding the table.
std::optional<PartitionForm> characterize_partition_form(const IntervalMeasureTable& q);

// Width superadditivity over co-singletons:
//   |Q(Omega \ I)| >= sum_{w in I} |Q(Omega \ {w})|  for every set I.
// Requires every singleton to have positive lower probability; throws
// Error(kPrecondition) otherwise.
bool family_form_condition(const IntervalMeasureTable& q);

// Builds an explicit family Y with build_table(Q_l, Y) == q:
//   Y_{Omega \ {w}} = |Q(Omega \ {w})| / Q_l({w}) on w,
//   Y_H = r_H * 1_{H^c} + sum_{w in H^c} Y_{Omega \ {w}},
// with r_H * Q_l(H^c) = |Q(H)| - sum_{w in H^c} |Q(Omega \ {w})|. When
// Q_l(H^c) = 0 the residue must vanish and r_H = 0.
//
// The values are not clamped to [0, 1]; run check_family on the result to see
// whether it is a valid non-increasing family. Throws Error(kPrecondition)
// when family_form_condition fails.
UncertaintyFamily reconstruct_family(const IntervalMeasureTable& q);

}  // namespace iprob

#endif  // IPROB_INTERVAL_MEASURE_HPP
