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

#include "iprob/complementation.hpp"

#include <string>

#include "iprob/error.hpp"

namespace iprob {

Event psi(const Event& h, const Partition& z) {
  require_same_space(h.space(), z.space());
  return Event(h.space(), z.psi_mask(h.mask()));
}

Event uncertainty_set(const Event& h, const Partition& z) {
  require_same_space(h.space(), z.space());
  return Event(h.space(), z.uncertainty_mask(h.mask()));
}

ComplementationTable ComplementationTable::from_function(
    SpacePtr space, const std::function<Event(const Event&)>& fn) {
  require_budget(space->size(), exhaustive_outcome_cap(), "complementation table");
  const std::uint64_t full = space->full_mask();
  std::vector<std::uint64_t> map(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t m = 0; m <= full; ++m) {
    Event image = fn(Event(space, m));
    require_same_space(space, image.space());
    map[m] = image.mask();
  }
  return ComplementationTable(std::move(space), std::move(map));
}

ComplementationTable ComplementationTable::from_partition(const Partition& z) {
  require_budget(z.space()->size(), exhaustive_outcome_cap(), "complementation table");
  const std::uint64_t full = z.space()->full_mask();
  std::vector<std::uint64_t> map(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t m = 0; m <= full; ++m) map[m] = z.psi_mask(m);
  return ComplementationTable(z.space(), std::move(map));
}

ComplementationTable ComplementationTable::classical(SpacePtr space) {
  return from_function(std::move(space), [](const Event& h) { return h.complement(); });
}

ComplementationTable ComplementationTable::from_entries(
    SpacePtr space, const std::vector<std::pair<Event, Event>>& entries) {
  require_budget(space->size(), exhaustive_outcome_cap(), "complementation table");
  const std::uint64_t full = space->full_mask();
  std::vector<std::uint64_t> map(static_cast<std::size_t>(full) + 1);
  std::vector<bool> filled(map.size(), false);
  for (const auto& [h, image] : entries) {
    require_same_space(space, h.space());
    require_same_space(space, image.space());
    map[h.mask()] = image.mask();
    filled[h.mask()] = true;
  }
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (!filled[m]) {
      throw Error(ErrorCode::kValidation, "partial table: no image for " + Event(space, m).str());
    }
  }
  return ComplementationTable(std::move(space), std::move(map));
}

Event ComplementationTable::operator()(const Event& h) const {
  require_same_space(space_, h.space());
  return Event(space_, map_[h.mask()]);
}

WeakComplementationReport verify_weak_complementation(const ComplementationTable& table) {
  const SpacePtr& space = table.space();
  require_budget(space->size(), exhaustive_outcome_cap(), "verify_weak_complementation");
  const std::uint64_t full = space->full_mask();
  auto residual = [&](std::uint64_t h) { return ~h & full & ~table.image(h); };

  WeakComplementationReport report;
  bool a_ok = true;
  bool b_ok = true;
  bool c_ok = true;
  for (std::uint64_t h = 0; h <= full; ++h) {
    const std::uint64_t image = table.image(h);
    if (image & h) {
      a_ok = false;
      report.witnesses.push_back({'a', Event(space, h), std::nullopt});
    }
    if (table.image(image) & ~h) {
      c_ok = false;
      report.witnesses.push_back({'c', Event(space, h), std::nullopt});
    }
    // Every strict superset K of H: enumerate the bits outside H.
    const std::uint64_t outside = ~h & full;
    const std::uint64_t rh = residual(h);
    for (std::uint64_t extra = outside; extra != 0; extra = (extra - 1) & outside) {
      const std::uint64_t k = h | extra;
      if (residual(k) & ~rh) {
        b_ok = false;
        report.witnesses.push_back({'b', Event(space, h), Event(space, k)});
      }
    }
  }
  report.is_weak = a_ok && b_ok;
  report.is_regular = report.is_weak && c_ok;
  return report;
}

DeMorganReport de_morgan_report(const Event& h, const Event& k, const Partition& z) {
  require_same_space(h.space(), k.space());
  require_same_space(h.space(), z.space());
  const SpacePtr& space = h.space();
  const std::uint64_t full = space->full_mask();
  const std::uint64_t hm = h.mask();
  const std::uint64_t km = k.mask();
  const std::uint64_t hc = ~hm & full;
  const std::uint64_t kc = ~km & full;

  std::uint64_t touched_either = 0;
  std::uint64_t touched_both = 0;
  std::uint64_t meet_touched = 0;
  std::uint64_t only_h = 0;
  std::uint64_t only_k = 0;
  for (const auto& block : z.blocks()) {
    const std::uint64_t b = block.mask();
    const bool th = hm & b;
    const bool tk = km & b;
    if (th || tk) touched_either |= b;
    if (th && tk) touched_both |= b;
    if (hm & km & b) meet_touched |= (hc | kc) & b;
    if (th && !tk) only_h |= hc & b;
    if (tk && !th) only_k |= kc & b;
  }

  auto ev = [&](std::uint64_t m) { return Event(space, m); };
  const std::uint64_t psi_h = z.psi_mask(hm);
  const std::uint64_t psi_k = z.psi_mask(km);

  DeMorganReport r{
      {ev(hc & kc & touched_either), ev(z.psi_mask(hm | km))},
      {ev(hc & kc & touched_both), ev(psi_h & psi_k)},
      {ev(meet_touched), ev(z.psi_mask(hm & km))},
      {ev(only_h | only_k | ((hc | kc) & touched_both)), ev(psi_h | psi_k)},
      {ev(psi_h & psi_k), ev(z.psi_mask(hm | km))},
      {ev(z.psi_mask(hm & km)), ev(psi_h | psi_k)},
  };
  for (Containment* c : {&r.meet_inside_union, &r.intersection_inside_join}) {
    c->holds = (c->smaller.mask() & ~c->larger.mask()) == 0;
    c->strict = c->holds && c->smaller.mask() != c->larger.mask();
  }
  return r;
}

Event lattice_union(const Event& h, const Event& k, const Partition& z) {
  return psi(h | k, z).complement();
}

Event lattice_meet(const Event& h, const Event& k) { return h & k; }

bool lattice_leq(const Event& h, const Event& k, const Partition& z) {
  return psi(k, z).subset_of(psi(h, z));
}

namespace {

bool distributes_mask(std::uint64_t h, std::uint64_t k, std::uint64_t l, const Partition& z,
                      std::uint64_t full) {
  auto join = [&](std::uint64_t a, std::uint64_t b) { return ~z.psi_mask(a | b) & full; };
  return (h & join(k, l)) == join(h & k, h & l);
}

}  // namespace

bool distributes(const Event& h, const Event& k, const Event& l, const Partition& z) {
  require_same_space(h.space(), k.space());
  require_same_space(h.space(), l.space());
  require_same_space(h.space(), z.space());
  return distributes_mask(h.mask(), k.mask(), l.mask(), z, z.space()->full_mask());
}

LatticeAxiomReport lattice_axiom_report(const Partition& z) {
  const SpacePtr& space = z.space();
  require_budget(space->size(), triple_scan_outcome_cap(), "lattice_axiom_report");
  const std::uint64_t full = space->full_mask();
  LatticeAxiomReport r;

  r.complemented = true;
  for (std::uint64_t h = 0; h <= full; ++h) {
    const std::uint64_t p = z.psi_mask(h);
    const bool join_is_full = (~z.psi_mask(h | p) & full) == full;
    const bool meet_is_empty = (h & p) == 0;
    const bool double_psi_ok = (z.psi_mask(p) & ~h & full) == 0;
    if (!(join_is_full && meet_is_empty && double_psi_ok)) {
      r.complemented = false;
      r.complement_failure = Event(space, h);
      break;
    }
  }

  const std::uint64_t psi_empty = z.psi_mask(0);
  const std::uint64_t psi_full = z.psi_mask(full);
  r.empty_is_minimum = true;
  r.omega_is_maximum = true;
  for (std::uint64_t k = 0; k <= full; ++k) {
    const std::uint64_t pk = z.psi_mask(k);
    if (pk & ~psi_empty) r.empty_is_minimum = false;
    if (psi_full & ~pk) r.omega_is_maximum = false;
  }

  for (std::uint64_t h = 1; h <= full && !r.witness; ++h) {
    const std::uint64_t p = z.psi_mask(h);
    if (!distributes_mask(h, h, p, z, full)) {
      r.witness = DistributivityWitness{Event(space, h), Event(space, h), Event(space, p)};
    }
  }
  for (std::uint64_t h = 0; h <= full && !r.witness; ++h) {
    for (std::uint64_t k = 0; k <= full && !r.witness; ++k) {
      for (std::uint64_t l = 0; l <= full; ++l) {
        if (!distributes_mask(h, k, l, z, full)) {
          r.witness = DistributivityWitness{Event(space, h), Event(space, k), Event(space, l)};
          break;
        }
      }
    }
  }
  r.distributive = !r.witness.has_value();
  return r;
}

}  // namespace iprob
