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

#include "iprob/interval_measure.hpp"

#include <algorithm>
#include <bit>

#include "iprob/error.hpp"

namespace iprob {

Interval interval_measure(const ProbMeasure& p, const UncertaintyFamily& y, const Event& h) {
  require_same_space(p.space(), h.space());
  Rational lo = p(h);
  Rational hi = lo + y.expectation(p, h);
  return Interval(std::move(lo), std::move(hi));
}

Interval interval_measure(const ProbMeasure& p, const Partition& z, const Event& h) {
  require_same_space(p.space(), h.space());
  require_same_space(z.space(), h.space());
  Rational lo = p(h);
  Rational hi = lo + p.of_mask(z.uncertainty_mask(h.mask()));
  return Interval(std::move(lo), std::move(hi));
}

IntervalMeasureTable::IntervalMeasureTable(SpacePtr space, std::vector<Interval> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  require_budget(space_->size(), exhaustive_outcome_cap(), "interval measure table");
  if (entries_.size() != static_cast<std::size_t>(space_->full_mask()) + 1) {
    throw Error(ErrorCode::kValidation, "interval table must list every event of the space");
  }
}

IntervalMeasureTable IntervalMeasureTable::from_entries(
    SpacePtr space, const std::vector<std::pair<Event, Interval>>& entries) {
  require_budget(space->size(), exhaustive_outcome_cap(), "interval measure table");
  const std::size_t n = static_cast<std::size_t>(space->full_mask()) + 1;
  std::vector<std::optional<Interval>> slots(n);
  for (const auto& [h, iv] : entries) {
    require_same_space(space, h.space());
    slots[h.mask()] = iv;
  }
  std::vector<Interval> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (!slots[m]) throw Error(ErrorCode::kValidation, "partial table: no interval for " + Event(space, m).str());
    out.push_back(*slots[m]);
  }
  return IntervalMeasureTable(std::move(space), std::move(out));
}

const Interval& IntervalMeasureTable::operator()(const Event& h) const {
  require_same_space(space_, h.space());
  return entries_[h.mask()];
}

ProbMeasure IntervalMeasureTable::lower_measure() const {
  std::vector<Rational> w;
  w.reserve(space_->size());
  for (std::size_t i = 0; i < space_->size(); ++i) w.push_back(entries_[std::uint64_t{1} << i].lo());
  return ProbMeasure::make(space_, std::move(w));
}

IntervalMeasureTable build_table(const ProbMeasure& p, const UncertaintyFamily& y) {
  const SpacePtr& space = p.space();
  require_same_space(space, y.space());
  require_budget(space->size(), exhaustive_outcome_cap(), "build_table");
  const std::uint64_t full = space->full_mask();
  std::vector<Interval> entries;
  entries.reserve(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t m = 0; m <= full; ++m) entries.push_back(interval_measure(p, y, Event(space, m)));
  return IntervalMeasureTable(space, std::move(entries));
}

TableAxiomReport check_table_axioms(const IntervalMeasureTable& q) {
  const SpacePtr& space = q.space();
  const std::uint64_t full = space->full_mask();
  TableAxiomReport r;
  auto note = [&](std::uint64_t h, std::uint64_t k) {
    if (!r.witness) r.witness = std::make_pair(Event(space, h), Event(space, k));
  };
  if (q.at(full).lo() != Rational(1)) {
    r.lower_is_probability = false;
    note(full, full);
  }
  for (std::uint64_t h = 0; h <= full; ++h) {
    Rational sum;
    for (std::size_t i = 0; i < space->size(); ++i) {
      if ((h >> i) & 1U) sum += q.at(std::uint64_t{1} << i).lo();
    }
    if (sum != q.at(h).lo()) {
      r.lower_is_probability = false;
      note(h, h);
    }
    const Rational wh = q.width(h);
    for (std::size_t i = 0; i < space->size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (h & bit) continue;
      if (q.width(h | bit) > wh) {
        r.width_antitone = false;
        note(h, h | bit);
      }
    }
  }
  return r;
}

std::optional<PartitionForm> characterize_partition_form(const IntervalMeasureTable& q) {
  const SpacePtr& space = q.space();
  const std::uint64_t full = space->full_mask();
  if (!check_table_axioms(q).lower_is_probability) return std::nullopt;
  const ProbMeasure p = q.lower_measure();
  const Rational one(1);

  // Distinguished events.
  std::vector<std::uint64_t> members{0};
  for (std::uint64_t h = 1; h <= full; ++h) {
    const Interval& qh = q.at(h);
    const Interval& qc = q.at(full & ~h);
    if (qh.hi() == one && qc.hi() == one && qc.lo() == one - qh.lo()) members.push_back(h);
  }

  // Atoms: classes of outcomes no member separates. The members form a
  // subalgebra iff there are exactly 2^(#atoms) of them.
  std::vector<std::uint64_t> atoms{full};
  for (std::uint64_t m : members) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t a : atoms) {
      if (a & m) next.push_back(a & m);
      if (a & ~m) next.push_back(a & ~m);
    }
    atoms.swap(next);
  }
  if (atoms.size() >= 64 || members.size() != (std::size_t{1} << atoms.size())) return std::nullopt;

  for (std::uint64_t z : atoms) {
    const Rational pz = p.of_mask(z);
    const std::uint64_t rest = full & ~z;
    for (std::uint64_t h = z; h != 0; h = (h - 1) & z) {
      // Inside an atom: Q(H) = [Q_l(H), 1 - Q_l(Z \ H)].
      const Rational ph = p.of_mask(h);
      if (q.at(h) != Interval(ph, one - p.of_mask(z & ~h))) return std::nullopt;
      // Across atoms: |Q(H u K)| + Q_l(Z) = |Q(K)| for non-empty K outside Z.
      for (std::uint64_t k = rest; k != 0; k = (k - 1) & rest) {
        if (q.width(h | k) + pz != q.width(k)) return std::nullopt;
      }
    }
  }

  std::sort(atoms.begin(), atoms.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
  std::vector<Event> blocks;
  bool non_unique = false;
  for (std::uint64_t a : atoms) {
    blocks.emplace_back(space, a);
    if (p.of_mask(a).is_zero()) non_unique = true;
  }
  Partition z = Partition::make(space, std::move(blocks));
  if (!(build_table(p, UncertaintyFamily::partition_indicator(z)) == q)) return std::nullopt;
  return PartitionForm{p, std::move(z), non_unique};
}

namespace {

struct CoSingletonWidths {
  std::vector<Rational> lower;  // Q_l({w})
  std::vector<Rational> width;  // |Q(Omega \ {w})|
  std::vector<Rational> sums;   // sums[I] = sum_{w in I} width[w]
};

CoSingletonWidths co_singleton_widths(const IntervalMeasureTable& q) {
  const SpacePtr& space = q.space();
  const std::uint64_t full = space->full_mask();
  CoSingletonWidths out;
  for (std::size_t i = 0; i < space->size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    out.lower.push_back(q.at(bit).lo());
    if (out.lower.back().sign() <= 0) {
      throw Error(ErrorCode::kPrecondition,
                  "outcome \"" + space->label(i) + "\" has zero lower probability; the condition does not apply");
    }
    out.width.push_back(q.width(full & ~bit));
  }
  out.sums.resize(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t s = 1; s <= full; ++s) {
    out.sums[s] = out.sums[s & (s - 1)] + out.width[static_cast<std::size_t>(std::countr_zero(s))];
  }
  return out;
}

}  // namespace

bool family_form_condition(const IntervalMeasureTable& q) {
  const std::uint64_t full = q.space()->full_mask();
  const auto cw = co_singleton_widths(q);
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (q.width(full & ~s) < cw.sums[s]) return false;
  }
  return true;
}

UncertaintyFamily reconstruct_family(const IntervalMeasureTable& q) {
  if (!family_form_condition(q)) {
    throw Error(ErrorCode::kPrecondition, "table violates width superadditivity; no family reconstruction");
  }
  const SpacePtr& space = q.space();
  const std::uint64_t full = space->full_mask();
  const auto cw = co_singleton_widths(q);
  std::vector<Rational> per_outcome;  // value of Y_{Omega \ {w}} at w
  for (std::size_t i = 0; i < space->size(); ++i) per_outcome.push_back(cw.width[i] / cw.lower[i]);

  std::map<std::uint64_t, RandomVariable> table;
  for (std::uint64_t h = 0; h <= full; ++h) {
    const std::uint64_t hc = full & ~h;
    Rational mass;
    for (std::size_t i = 0; i < space->size(); ++i) {
      if ((hc >> i) & 1U) mass += cw.lower[i];
    }
    const Rational residue = q.width(h) - cw.sums[hc];
    Rational r;
    if (mass.is_zero()) {
      if (!residue.is_zero()) {
        throw Error(ErrorCode::kPrecondition,
                    "width of " + Event(space, h).str() + " cannot be carried by a null complement");
      }
    } else {
      r = residue / mass;
    }
    std::vector<Rational> v(space->size());
    for (std::size_t i = 0; i < space->size(); ++i) {
      if ((hc >> i) & 1U) v[i] = r + per_outcome[i];
    }
    table.emplace(h, RandomVariable(space, std::move(v)));
  }
  return UncertaintyFamily::explicit_table(space, std::move(table), /*require_unit_range=*/false);
}

}  // namespace iprob
