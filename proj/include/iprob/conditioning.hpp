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

#ifndef IPROB_CONDITIONING_HPP
#define IPROB_CONDITIONING_HPP

#include <vector>

#include "iprob/family.hpp"
#include "iprob/measure.hpp"
#include "iprob/partition.hpp"

namespace iprob {

// Conditional interval of A given H under Q = P_Y:
//
//   lo = E[1_A (1_H + Y_H)] / D,   hi = E[(1_A + Y_A)(1_H + Y_H)] / D,
//   D  = P(H) + E[Y_H].
//
// H must not be negligible, i.e. Q(H) != [0, 0]; otherwise throws
// Error(kPrecondition).
Interval conditional(const ProbMeasure& p, const UncertaintyFamily& y, const Event& a, const Event& h);

// Partition form: [P(A | S), P(psi(A)^c | S)] with S = psi(H)^c.
Interval conditional_partition(const ProbMeasure& p, const Partition& z, const Event& a, const Event& h);

// Closed form for non-empty H inside block n and non-empty A inside block m.
// Throws Error(kPrecondition) when the containments fail or H is negligible.
Interval conditional_within_blocks(const ProbMeasure& p, const Partition& z, const Event& a,
                                   const Event& h, std::size_t n, std::size_t m);

// A is independent of H when Q(A | H) == Q(A) exactly.
bool is_independent(const ProbMeasure& p, const UncertaintyFamily& y, const Event& a, const Event& h);

// Monotone set function with nu(empty) = 0 and nu(Omega) = 1.
class Capacity {
 public:
  // `values` is indexed by event mask and must cover the whole powerset.
  static Capacity make(SpacePtr space, std::vector<Rational> values);
  static Capacity from_measure(const ProbMeasure& p);

  const SpacePtr& space() const { return space_; }
  const Rational& operator()(const Event& h) const;
  // nu(H) + nu(H^c) <= 1 for every H.
  bool is_superadditive() const;

 private:
  Capacity(SpacePtr space, std::vector<Rational> values) : space_(std::move(space)), values_(std::move(values)) {}

  SpacePtr space_;
  std::vector<Rational> values_;
};

// (nu((A n H) u H^c) - nu(H^c)) / (1 - nu(H^c)); requires nu(H^c) != 1.
Rational dempster_conditional(const Capacity& nu, const Event& a, const Event& h);

}  // namespace iprob

#endif  // IPROB_CONDITIONING_HPP
