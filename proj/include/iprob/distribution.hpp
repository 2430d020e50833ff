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

#ifndef IPROB_DISTRIBUTION_HPP
#define IPROB_DISTRIBUTION_HPP

#include <vector>

#include "iprob/family.hpp"
#include "iprob/measure.hpp"
#include "iprob/partition.hpp"

namespace iprob {

// Sorted distinct values attained by any of the variables. Both interval CDFs
// are step functions that only change at these points.
std::vector<Rational> threshold_set(const std::vector<RandomVariable>& xs);

// F(t) = Q({X <= t}) with Q = P_Y.
Interval interval_cdf(const ProbMeasure& p, const UncertaintyFamily& y, const RandomVariable& x,
                      const Rational& t);

// Interval law of X under the partition measure: Q(X^{-1}(B)). Every value in
// B must be attained by X; throws Error(kInvalidArgument) otherwise.
Interval pushforward_law(const ProbMeasure& p, const Partition& z, const RandomVariable& x,
                         const std::vector<Rational>& values);

// X1 dominates X2 when, at every threshold, lo(F1) <= lo(F2) and
// |F1| >= |F2|.
bool dominates(const ProbMeasure& p, const UncertaintyFamily& y, const RandomVariable& x1,
               const RandomVariable& x2);

}  // namespace iprob

#endif  // IPROB_DISTRIBUTION_HPP
