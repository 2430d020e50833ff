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

#include "iprob/distribution.hpp"

#include <algorithm>

#include "iprob/error.hpp"
#include "iprob/interval_measure.hpp"

namespace iprob {

std::vector<Rational> threshold_set(const std::vector<RandomVariable>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.insert(out.end(), x.values().begin(), x.values().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Interval interval_cdf(const ProbMeasure& p, const UncertaintyFamily& y, const RandomVariable& x,
                      const Rational& t) {
  require_same_space(p.space(), x.space());
  return interval_measure(p, y, x.at_most(t));
}

Interval pushforward_law(const ProbMeasure& p, const Partition& z, const RandomVariable& x,
                         const std::vector<Rational>& values) {
  require_same_space(p.space(), x.space());
  const auto range = x.range();
  std::uint64_t mask = 0;
  for (const auto& v : values) {
    if (!std::binary_search(range.begin(), range.end(), v)) {
      throw Error(ErrorCode::kInvalidArgument, "value " + v.str() + " is not attained by the variable");
    }
    for (std::size_t i = 0; i < x.values().size(); ++i) {
      if (x[i] == v) mask |= std::uint64_t{1} << i;
    }
  }
  return interval_measure(p, z, Event(p.space(), mask));
}

bool dominates(const ProbMeasure& p, const UncertaintyFamily& y, const RandomVariable& x1,
               const RandomVariable& x2) {
  require_same_space(x1.space(), x2.space());
  for (const auto& t : threshold_set({x1, x2})) {
    const Interval f1 = interval_cdf(p, y, x1, t);
    const Interval f2 = interval_cdf(p, y, x2, t);
    if (f1.lo() > f2.lo() || f1.width() < f2.width()) return false;
  }
  return true;
}

}  // namespace iprob
