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

#ifndef IPROB_COLLECTION_HPP
#define IPROB_COLLECTION_HPP

#include <vector>

#include "iprob/family.hpp"
#include "iprob/measure.hpp"

namespace iprob {

struct CollectionMember {
  ProbMeasure measure;
  UncertaintyFamily family;
};

// Finitely many interval measures P_j with families Y_j on one space.
class MeasureCollection {
 public:
  // Throws Error(kInvalidArgument) when empty, Error(kSpaceMismatch) when the
  // members do not share a space.
  explicit MeasureCollection(std::vector<CollectionMember> members);

  const SpacePtr& space() const { return members_.front().measure.space(); }
  const std::vector<CollectionMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<CollectionMember> members_;
};

// [min_j P_j(H), max_j (P_j(H) + E_j[Y_{j,H}])]. Not an interval measure in
// general: widths may grow with H.
Interval envelope(const MeasureCollection& c, const Event& h);

// Pointwise max over members of
//   partition members:  1 on the uncertainty set of H,
//   alpha members:      1_{H^c} * sum_i alpha_i(H) / P_j(K_i) * 1_{K_i}.
// Alpha members need P_j(K_i) > 0 and alpha_i(H) <= P_j(K_i); other kinds are
// rejected. Throws Error(kPrecondition).
RandomVariable global_uncertainty(const MeasureCollection& c, const Event& h);

// [min_j P_j(H), max_j (P_j(H) + E_j[Y_H])] with Y_H the global uncertainty.
Interval pooled_envelope(const MeasureCollection& c, const Event& h);

struct Coherence {
  Rational delta;
  // Members whose E_j[Y_H] is 0; their term is taken as 0.
  std::vector<std::size_t> defaulted;
};

// delta(H) = max_j (1 - |Q_j(H)| / E_j[Y_H]).
Coherence coherence(const MeasureCollection& c, const Event& h);
Rational coherence_delta(const MeasureCollection& c, const Event& h);

}  // namespace iprob

#endif  // IPROB_COLLECTION_HPP
