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

#include "iprob/measure.hpp"

#include <algorithm>

#include "iprob/error.hpp"

namespace iprob {

ProbMeasure ProbMeasure::make(SpacePtr space, std::vector<Rational> weights) {
  if (!space) throw Error(ErrorCode::kInvalidArgument, "measure without a sample space");
  if (weights.size() != space->size()) {
    throw Error(ErrorCode::kValidation, "expected " + std::to_string(space->size()) + " weights, got " +
                                            std::to_string(weights.size()));
  }
  Rational total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].sign() < 0) {
      throw Error(ErrorCode::kValidation, "negative weight " + weights[i].str() + " for outcome \"" +
                                              space->label(i) + "\"");
    }
    total += weights[i];
  }
  if (total != Rational(1)) throw Error(ErrorCode::kValidation, "weights sum to " + total.str());
  return ProbMeasure(std::move(space), std::move(weights));
}

ProbMeasure ProbMeasure::uniform(SpacePtr space) {
  const auto n = static_cast<long>(space->size());
  std::vector<Rational> w(space->size(), Rational(1, n));
  return make(std::move(space), std::move(w));
}

ProbMeasure ProbMeasure::mix(const Rational& lambda, const ProbMeasure& a, const ProbMeasure& b) {
  require_same_space(a.space_, b.space_);
  if (lambda.sign() < 0 || lambda > Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "mixing weight outside [0,1]");
  }
  std::vector<Rational> w;
  w.reserve(a.weights_.size());
  for (std::size_t i = 0; i < a.weights_.size(); ++i) {
    w.push_back(lambda * a.weights_[i] + (Rational(1) - lambda) * b.weights_[i]);
  }
  return ProbMeasure(a.space_, std::move(w));
}

Rational ProbMeasure::operator()(const Event& h) const {
  require_same_space(space_, h.space());
  return of_mask(h.mask());
}

Rational ProbMeasure::of_mask(std::uint64_t mask) const {
  Rational total;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) total += weights_[i];
  }
  return total;
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.sign() < 0 || lo_ > hi_ || hi_ > Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a subinterval of [0,1]: [" + lo_.str() + ", " + hi_.str() + "]");
  }
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

std::string Interval::percent_str() const {
  return "[" + lo_.percent() + ", " + hi_.percent() + "]";
}

RandomVariable::RandomVariable(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "random variable without a sample space");
  if (values_.size() != space_->size()) {
    throw Error(ErrorCode::kValidation, "random variable must define a value for every outcome");
  }
}

RandomVariable RandomVariable::zero(SpacePtr space) { return constant(std::move(space), Rational(0)); }

RandomVariable RandomVariable::constant(SpacePtr space, const Rational& c) {
  const auto n = space->size();
  return RandomVariable(std::move(space), std::vector<Rational>(n, c));
}

RandomVariable RandomVariable::indicator(const Event& e) {
  std::vector<Rational> v(e.space()->size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (e.contains(i)) v[i] = Rational(1);
  }
  return RandomVariable(e.space(), std::move(v));
}

Rational RandomVariable::expectation(const ProbMeasure& p) const {
  require_same_space(space_, p.space());
  Rational total;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].is_zero() && !p.weight(i).is_zero()) total += values_[i] * p.weight(i);
  }
  return total;
}

Event RandomVariable::at_most(const Rational& t) const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= t) m |= std::uint64_t{1} << i;
  }
  return Event(space_, m);
}

std::vector<Rational> RandomVariable::range() const {
  std::vector<Rational> out = values_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool RandomVariable::pointwise_leq(const RandomVariable& other) const {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

RandomVariable operator+(const RandomVariable& a, const RandomVariable& b) {
  require_same_space(a.space_, b.space_);
  std::vector<Rational> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
  return RandomVariable(a.space_, std::move(v));
}

RandomVariable operator*(const RandomVariable& a, const RandomVariable& b) {
  require_same_space(a.space_, b.space_);
  std::vector<Rational> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return RandomVariable(a.space_, std::move(v));
}

RandomVariable operator*(const Rational& c, const RandomVariable& a) {
  std::vector<Rational> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.values_[i];
  return RandomVariable(a.space_, std::move(v));
}

}  // namespace iprob
