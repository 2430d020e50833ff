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

#include "iprob/rational.hpp"

#include <cctype>
#include <string>

#include "iprob/error.hpp"

namespace iprob {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::kParse, "not an exact rational: \"" + std::string(text) + "\"");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text);
    out = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpz_class scale = pow10(static_cast<long>(frac.size()));
    out = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(s)) bad(text);
    out = mpq_class(mpz_class(std::string(s), 10));
  }
  out.canonicalize();
  if (negative) out = -out;
  return Rational(out);
}

std::string Rational::decimal(int significant) const {
  if (is_zero()) return "0";
  if (significant < 1) significant = 1;
  mpq_class a = abs(value_);
  // 10^e <= a < 10^(e+1)
  long e = 0;
  auto ten_pow = [](long k) {
    return k >= 0 ? mpq_class(pow10(k)) : mpq_class(mpz_class(1), pow10(-k));
  };
  while (a >= ten_pow(e + 1)) ++e;
  while (a < ten_pow(e)) --e;
  long after_point = significant - 1 - e;
  mpq_class scaled = a * ten_pow(after_point) + mpq_class(1, 2);
  mpz_class n = scaled.get_num() / scaled.get_den();  // floor, scaled > 0
  if (n == pow10(significant)) {
    n /= 10;
    --after_point;
  }
  std::string digits = n.get_str();
  std::string out;
  if (after_point <= 0) {
    out = digits + std::string(static_cast<std::size_t>(-after_point), '0');
  } else {
    const auto k = static_cast<std::size_t>(after_point);
    if (digits.size() <= k) digits = std::string(k + 1 - digits.size(), '0') + digits;
    out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    out.erase(out.find_last_not_of('0') + 1);
    if (out.back() == '.') out.pop_back();
  }
  return sgn(value_) < 0 ? "-" + out : out;
}

std::string Rational::percent(int significant) const {
  return Rational(mpq_class(value_ * 100)).decimal(significant) + "%";
}

}  // namespace iprob
