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

#ifndef IPROB_MEASURE_HPP
#define IPROB_MEASURE_HPP

#include <string>
#include <vector>

#include "iprob/rational.hpp"
#include "iprob/sample_space.hpp"

namespace iprob {

// Probability measure on a finite space: one non-negative exact weight per
// outcome, summing to exactly 1.
class ProbMeasure {
 public:
  // Throws Error(kValidation) on negative weights or a total other than 1.
  static ProbMeasure make(SpacePtr space, std::vector<Rational> weights);
  static ProbMeasure uniform(SpacePtr space);
  // lambda * a + (1 - lambda) * b, lambda in [0, 1].
  static ProbMeasure mix(const Rational& lambda, const ProbMeasure& a, const ProbMeasure& b);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t outcome) const { return weights_.at(outcome); }

  Rational operator()(const Event& h) const;
  Rational of_mask(std::uint64_t mask) const;

  friend bool operator==(const ProbMeasure& a, const ProbMeasure& b) {
    return same_space(a.space_, b.space_) && a.weights_ == b.weights_;
  }

 private:
  ProbMeasure(SpacePtr space, std::vector<Rational> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {}

  SpacePtr space_;
  std::vector<Rational> weights_;
};

// Closed subinterval [lo, hi] of [0, 1].
class Interval {
 public:
  // Throws Error(kInvalidArgument) unless 0 <= lo <= hi <= 1.
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& v) { return Interval(v, v); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  // Set inclusion of *this in `outer`.
  bool inside(const Interval& outer) const { return outer.lo_ <= lo_ && hi_ <= outer.hi_; }

  // "[lo, hi]" in exact rationals.
  std::string str() const;
  // "[lo%, hi%]", display only.
  std::string percent_str() const;

  friend bool operator==(const Interval& a, const Interval& b) = default;

 private:
  Rational lo_;
  Rational hi_;
};

// Real-valued (exact rational) function on the outcomes.
class RandomVariable {
 public:
  RandomVariable(SpacePtr space, std::vector<Rational> values);
  static RandomVariable zero(SpacePtr space);
  static RandomVariable constant(SpacePtr space, const Rational& c);
  static RandomVariable indicator(const Event& e);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t outcome) const { return values_.at(outcome); }

  Rational expectation(const ProbMeasure& p) const;

  // {w : X(w) <= t}
  Event at_most(const Rational& t) const;
  // Sorted distinct values.
  std::vector<Rational> range() const;
  // Pointwise X <= Y.
  bool pointwise_leq(const RandomVariable& other) const;

  friend RandomVariable operator+(const RandomVariable& a, const RandomVariable& b);
  friend RandomVariable operator*(const RandomVariable& a, const RandomVariable& b);
  friend RandomVariable operator*(const Rational& c, const RandomVariable& a);
  friend bool operator==(const RandomVariable& a, const RandomVariable& b) {
    return same_space(a.space_, b.space_) && a.values_ == b.values_;
  }

 private:
  SpacePtr space_;
  std::vector<Rational> values_;
};

}  // namespace iprob

#endif  // IPROB_MEASURE_HPP
