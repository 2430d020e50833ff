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

#include "iprob/collection.hpp"

#include <algorithm>

#include "iprob/error.hpp"
#include "iprob/interval_measure.hpp"

namespace iprob {

MeasureCollection::MeasureCollection(std::vector<CollectionMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::kInvalidArgument, "collection needs at least one member");
  for (const auto& m : members_) {
    require_same_space(space(), m.measure.space());
    require_same_space(space(), m.family.space());
  }
}

Interval envelope(const MeasureCollection& c, const Event& h) {
  std::optional<Rational> lo, hi;
  for (const auto& m : c.members()) {
    const Interval q = interval_measure(m.measure, m.family, h);
    if (!lo || q.lo() < *lo) lo = q.lo();
    if (!hi || q.hi() > *hi) hi = q.hi();
  }
  return Interval(*lo, *hi);
}

RandomVariable global_uncertainty(const MeasureCollection& c, const Event& h) {
  require_same_space(c.space(), h.space());
  const std::size_t n = c.space()->size();
  std::vector<Rational> out(n);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto& [p, y] = c.members()[j];
    std::vector<Rational> v(n);
    switch (y.kind()) {
      case UncertaintyFamily::Kind::kPartitionIndicator: {
        const std::uint64_t u = y.partition()->uncertainty_mask(h.mask());
        for (std::size_t i = 0; i < n; ++i) {
          if ((u >> i) & 1U) v[i] = Rational(1);
        }
        break;
      }
      case UncertaintyFamily::Kind::kAlpha: {
        const Partition& k = *y.partition();
        for (std::size_t b = 0; b < k.block_count(); ++b) {
          const Rational pk = p(k.block(b));
          if (pk.is_zero()) {
            throw Error(ErrorCode::kPrecondition, "member " + std::to_string(j) + ": block " +
                                                      k.block(b).str() + " has zero probability");
          }
          const Rational a = y.alpha_value(b, h);
          if (a > pk) {
            throw Error(ErrorCode::kPrecondition, "member " + std::to_string(j) + ": alpha " + a.str() +
                                                      " exceeds P(" + k.block(b).str() + ") = " + pk.str());
          }
          const Rational ratio = a / pk;
          const std::uint64_t cell = k.block(b).mask() & ~h.mask();
          for (std::size_t i = 0; i < n; ++i) {
            if ((cell >> i) & 1U) v[i] = ratio;
          }
        }
        break;
      }
      default:
        throw Error(ErrorCode::kPrecondition, "member " + std::to_string(j) + " has family kind " +
                                                  kind_name(y.kind()) + "; need partition or alpha");
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = std::max(out[i], v[i]);
  }
  return RandomVariable(c.space(), std::move(out));
}

Interval pooled_envelope(const MeasureCollection& c, const Event& h) {
  const RandomVariable yh = global_uncertainty(c, h);
  std::optional<Rational> lo, hi;
  for (const auto& m : c.members()) {
    const Rational ph = m.measure(h);
    const Rational top = ph + yh.expectation(m.measure);
    if (!lo || ph < *lo) lo = ph;
    if (!hi || top > *hi) hi = top;
  }
  return Interval(*lo, *hi);
}

Coherence coherence(const MeasureCollection& c, const Event& h) {
  const RandomVariable yh = global_uncertainty(c, h);
  Coherence out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto& [p, y] = c.members()[j];
    const Rational pooled = yh.expectation(p);
    if (pooled.is_zero()) {
      out.defaulted.push_back(j);
      continue;
    }
    const Rational term = Rational(1) - y.expectation(p, h) / pooled;
    out.delta = std::max(out.delta, term);
  }
  return out;
}

Rational coherence_delta(const MeasureCollection& c, const Event& h) { return coherence(c, h).delta; }

}  // namespace iprob
