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

#include "iprob/family.hpp"

#include <mutex>
#include <variant>

#include "iprob/error.hpp"

namespace iprob {
namespace {

struct IndicatorRule {
  Partition z;
};

struct ScaledRule {
  Rational r;
};

struct AlphaRule {
  Partition k;
  UncertaintyFamily::AlphaFn fn;
};

struct ExplicitRule {
  std::map<std::uint64_t, RandomVariable> table;
};

bool in_unit_interval(const Rational& v) { return v.sign() >= 0 && v <= Rational(1); }

}  // namespace

struct UncertaintyFamily::Impl {
  using Rule = std::variant<IndicatorRule, ScaledRule, AlphaRule, ExplicitRule>;
  Impl(SpacePtr s, Rule r) : space(std::move(s)), rule(std::move(r)) {}

  SpacePtr space;
  Rule rule;

  mutable std::mutex memo_mutex;
  mutable std::map<std::pair<std::uint64_t, std::size_t>, Rational> memo;
};

UncertaintyFamily UncertaintyFamily::partition_indicator(Partition z) {
  SpacePtr space = z.space();
  auto impl = std::make_shared<Impl>(std::move(space), IndicatorRule{std::move(z)});
  return UncertaintyFamily(std::move(impl));
}

UncertaintyFamily UncertaintyFamily::scaled_complement(SpacePtr space, Rational r) {
  if (r.sign() <= 0 || r >= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "scale must lie strictly between 0 and 1, got " + r.str());
  }
  auto impl = std::make_shared<Impl>(std::move(space), ScaledRule{std::move(r)});
  return UncertaintyFamily(std::move(impl));
}

UncertaintyFamily UncertaintyFamily::alpha(Partition k, AlphaFn alpha) {
  if (k.is_cover()) throw Error(ErrorCode::kInvalidArgument, "alpha family needs a proper partition");
  if (!alpha) throw Error(ErrorCode::kInvalidArgument, "alpha family without an alpha function");
  SpacePtr space = k.space();
  auto impl = std::make_shared<Impl>(std::move(space), AlphaRule{std::move(k), std::move(alpha)});
  return UncertaintyFamily(std::move(impl));
}

UncertaintyFamily UncertaintyFamily::explicit_table(SpacePtr space,
                                                    std::map<std::uint64_t, RandomVariable> table,
                                                    bool require_unit_range) {
  for (const auto& [mask, y] : table) {
    Event h(space, mask);
    require_same_space(space, y.space());
    for (std::size_t i = 0; i < space->size(); ++i) {
      if (y[i].sign() < 0 || (require_unit_range && y[i] > Rational(1))) {
        throw Error(ErrorCode::kValidation, "Y_" + h.str() + " takes value " + y[i].str() + " outside [0,1]");
      }
      if (h.contains(i) && !y[i].is_zero()) {
        throw Error(ErrorCode::kValidation, "Y_" + h.str() + " is not zero on " + space->label(i));
      }
    }
  }
  auto impl = std::make_shared<Impl>(std::move(space), ExplicitRule{std::move(table)});
  return UncertaintyFamily(std::move(impl));
}

UncertaintyFamily::Kind UncertaintyFamily::kind() const {
  return static_cast<Kind>(impl_->rule.index());
}

const SpacePtr& UncertaintyFamily::space() const { return impl_->space; }

const Partition* UncertaintyFamily::partition() const {
  if (auto* r = std::get_if<IndicatorRule>(&impl_->rule)) return &r->z;
  if (auto* r = std::get_if<AlphaRule>(&impl_->rule)) return &r->k;
  return nullptr;
}

std::optional<Rational> UncertaintyFamily::scale() const {
  if (auto* r = std::get_if<ScaledRule>(&impl_->rule)) return r->r;
  return std::nullopt;
}

Rational UncertaintyFamily::alpha_value(std::size_t block, const Event& h) const {
  const auto* rule = std::get_if<AlphaRule>(&impl_->rule);
  if (!rule) throw Error(ErrorCode::kInvalidArgument, "not an alpha family");
  require_same_space(impl_->space, h.space());
  const std::size_t blocks = rule->k.block_count();
  if (block >= blocks) throw Error(ErrorCode::kInvalidArgument, "alpha block index out of range");
  const auto key = std::make_pair(h.mask(), block);
  {
    std::lock_guard lock(impl_->memo_mutex);
    if (auto it = impl_->memo.find(key); it != impl_->memo.end()) return it->second;
  }
  Rational v = rule->fn(block, h);
  if (!in_unit_interval(v)) {
    throw Error(ErrorCode::kValidation, "alpha_" + std::to_string(block) + "(" + h.str() + ") = " + v.str() +
                                            " lies outside [0,1]");
  }
  std::lock_guard lock(impl_->memo_mutex);
  impl_->memo.emplace(key, v);
  return v;
}

RandomVariable UncertaintyFamily::value(const Event& h) const {
  require_same_space(impl_->space, h.space());
  const SpacePtr& space = impl_->space;
  return std::visit(
      [&](const auto& rule) -> RandomVariable {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, IndicatorRule>) {
          return RandomVariable::indicator(Event(space, rule.z.uncertainty_mask(h.mask())));
        } else if constexpr (std::is_same_v<T, ScaledRule>) {
          return rule.r * RandomVariable::indicator(h.complement());
        } else if constexpr (std::is_same_v<T, AlphaRule>) {
          std::vector<Rational> v(space->size());
          for (std::size_t i = 0; i < rule.k.block_count(); ++i) {
            const std::uint64_t outside = rule.k.block(i).mask() & ~h.mask();
            if (!outside) continue;
            const Rational a = alpha_value(i, h);
            for (std::size_t w = 0; w < v.size(); ++w) {
              if ((outside >> w) & 1U) v[w] = a;
            }
          }
          return RandomVariable(space, std::move(v));
        } else {
          auto it = rule.table.find(h.mask());
          if (it == rule.table.end()) {
            throw Error(ErrorCode::kNotFound, "explicit family has no entry for " + h.str());
          }
          return it->second;
        }
      },
      impl_->rule);
}

Rational UncertaintyFamily::expectation(const ProbMeasure& p, const Event& h) const {
  require_same_space(impl_->space, h.space());
  require_same_space(impl_->space, p.space());
  const std::uint64_t hc = ~h.mask() & impl_->space->full_mask();
  if (const auto* r = std::get_if<IndicatorRule>(&impl_->rule)) {
    return p.of_mask(r->z.uncertainty_mask(h.mask()));
  }
  if (const auto* r = std::get_if<ScaledRule>(&impl_->rule)) return r->r * p.of_mask(hc);
  if (const auto* r = std::get_if<AlphaRule>(&impl_->rule)) {
    Rational total;
    for (std::size_t i = 0; i < r->k.block_count(); ++i) {
      const std::uint64_t outside = r->k.block(i).mask() & hc;
      if (!outside) continue;
      const Rational mass = p.of_mask(outside);
      if (!mass.is_zero()) total += alpha_value(i, h) * mass;
    }
    return total;
  }
  return value(h).expectation(p);
}

std::string kind_name(UncertaintyFamily::Kind kind) {
  switch (kind) {
    case UncertaintyFamily::Kind::kPartitionIndicator:
      return "partition";
    case UncertaintyFamily::Kind::kScaledComplement:
      return "scaled";
    case UncertaintyFamily::Kind::kAlpha:
      return "alpha";
    case UncertaintyFamily::Kind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

RandomVariable family_value(const UncertaintyFamily& y, const Event& h) { return y.value(h); }

FamilyCheck check_family(const UncertaintyFamily& y) {
  const SpacePtr& space = y.space();
  require_budget(space->size(), exhaustive_outcome_cap(), "check_family");
  const std::uint64_t full = space->full_mask();
  std::vector<RandomVariable> values;
  values.reserve(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t m = 0; m <= full; ++m) values.push_back(y.value(Event(space, m)));

  FamilyCheck out;
  auto record = [&](std::uint64_t h, std::optional<std::uint64_t> k) {
    if (out.witness_h) return;
    out.witness_h = Event(space, h);
    if (k) out.witness_k = Event(space, *k);
  };
  for (std::uint64_t h = 0; h <= full; ++h) {
    const auto& yh = values[h];
    for (std::size_t w = 0; w < space->size(); ++w) {
      if (yh[w].sign() < 0 || yh[w] > Rational(1)) {
        out.bounded = false;
        record(h, std::nullopt);
      }
      if (((h >> w) & 1U) && !yh[w].is_zero()) {
        out.vanishes_on_event = false;
        record(h, std::nullopt);
      }
    }
    for (std::size_t w = 0; w < space->size(); ++w) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (h & bit) continue;
      if (!values[h | bit].pointwise_leq(yh)) {
        out.non_increasing = false;
        record(h, h | bit);
      }
    }
  }
  return out;
}

std::optional<AlphaMonotonicityViolation> check_alpha_monotone(const UncertaintyFamily& y) {
  const Partition* k = y.partition();
  if (y.kind() != UncertaintyFamily::Kind::kAlpha || !k) {
    throw Error(ErrorCode::kInvalidArgument, "not an alpha family");
  }
  const SpacePtr& space = y.space();
  require_budget(space->size(), exhaustive_outcome_cap(), "check_alpha_monotone");
  const std::uint64_t full = space->full_mask();
  for (std::uint64_t h = 0; h <= full; ++h) {
    Event he(space, h);
    for (std::size_t w = 0; w < space->size(); ++w) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (h & bit) continue;
      Event ke(space, h | bit);
      for (std::size_t i = 0; i < k->block_count(); ++i) {
        if (y.alpha_value(i, he) < y.alpha_value(i, ke)) return AlphaMonotonicityViolation{he, ke, i};
      }
    }
  }
  return std::nullopt;
}

}  // namespace iprob
