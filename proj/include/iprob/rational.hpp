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

#ifndef IPROB_RATIONAL_HPP
#define IPROB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace iprob {

// Exact arbitrary-precision rational in canonical reduced form.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of a number type
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "p", "p/q" and plain decimal notation ("0.25", "-1.5"). Decimal
  // input is converted exactly. Throws Error(kParse) on anything else.
  static Rational parse(std::string_view text);

  // Canonical text: "p/q", or "p" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  // Display-only renderings, rounded half-up to `significant` digits with
  // trailing zeros dropped: 2/3 -> "0.6667", 1/50 -> "2%".
  std::string decimal(int significant = 4) const;
  std::string percent(int significant = 4) const;
  double to_double() const { return value_.get_d(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  // Throws Error(kInvalidArgument) on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class value_;
};

}  // namespace iprob

#endif  // IPROB_RATIONAL_HPP
