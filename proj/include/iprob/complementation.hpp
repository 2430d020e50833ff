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

#ifndef IPROB_COMPLEMENTATION_HPP
#define IPROB_COMPLEMENTATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "iprob/partition.hpp"
#include "iprob/sample_space.hpp"

namespace iprob {

// Weak complement of H relative to Z: the part of H^c lying in blocks that H
// touches.
Event psi(const Event& h, const Partition& z);

// Indecisive outcomes of H: the blocks H does not touch. Together with H and
// psi(H) it partitions the space.
Event uncertainty_set(const Event& h, const Partition& z);

// A total map Event -> Event over the powerset of a small space.
class ComplementationTable {
 public:
  static ComplementationTable from_function(SpacePtr space,
                                            const std::function<Event(const Event&)>& fn);
  static ComplementationTable from_partition(const Partition& z);
  static ComplementationTable classical(SpacePtr space);
  // Throws Error(kValidation) if some event has no image.
  static ComplementationTable from_entries(SpacePtr space,
                                           const std::vector<std::pair<Event, Event>>& entries);

  const SpacePtr& space() const { return space_; }
  Event operator()(const Event& h) const;
  std::uint64_t image(std::uint64_t h) const { return map_[h]; }

 private:
  ComplementationTable(SpacePtr space, std::vector<std::uint64_t> map)
      : space_(std::move(space)), map_(std::move(map)) {}

  SpacePtr space_;
  std::vector<std::uint64_t> map_;
};

struct AxiomViolation {
  // 'a': psi(H) not inside H^c.  'b': H subset of K but K's residual escapes
  // H's.  'c': psi(psi(H)) not inside H.
  char condition;
  Event h;
  std::optional<Event> k;
};

struct WeakComplementationReport {
  bool is_weak = false;
  bool is_regular = false;
  std::vector<AxiomViolation> witnesses;
};

// Exhaustive check of the weak and regular complementation axioms.
WeakComplementationReport verify_weak_complementation(const ComplementationTable& table);

// One identity evaluated two ways: via the block-index formula and by
// applying psi directly.
struct IdentityCheck {
  Event formula;
  Event direct;
  bool holds() const { return formula == direct; }
};

struct Containment {
  Event smaller;
  Event larger;
  bool holds = false;
  bool strict = false;
};

struct DeMorganReport {
  IdentityCheck psi_of_union;             // psi(H u K)
  IdentityCheck intersection_of_psi;      // psi(H) n psi(K)
  IdentityCheck psi_of_intersection;      // psi(H n K)
  IdentityCheck union_of_psi;             // psi(H) u psi(K)
  Containment meet_inside_union;          // psi(H) n psi(K) <= psi(H u K)
  Containment intersection_inside_join;   // psi(H n K) <= psi(H) u psi(K)
};

DeMorganReport de_morgan_report(const Event& h, const Event& k, const Partition& z);

// Lattice structure obtained by reordering events through psi.
Event lattice_union(const Event& h, const Event& k, const Partition& z);
Event lattice_meet(const Event& h, const Event& k);
// H precedes K iff psi(K) is inside psi(H).
bool lattice_leq(const Event& h, const Event& k, const Partition& z);
// H meet (K join L) == (H meet K) join (H meet L).
bool distributes(const Event& h, const Event& k, const Event& l, const Partition& z);

struct DistributivityWitness {
  Event h;
  Event k;
  Event l;
};

struct LatticeAxiomReport {
  bool complemented = false;
  bool distributive = false;
  std::optional<DistributivityWitness> witness;
  bool empty_is_minimum = false;
  bool omega_is_maximum = false;
  // First event failing a complement identity, if any.
  std::optional<Event> complement_failure;
};

// Exhaustive; the space must fit triple_scan_outcome_cap(). Candidates of the
// form (H, H, psi(H)) with H non-empty are tried before the full triple scan.
LatticeAxiomReport lattice_axiom_report(const Partition& z);

}  // namespace iprob

#endif  // IPROB_COMPLEMENTATION_HPP
