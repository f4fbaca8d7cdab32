// Copyright 2026 The tsirelson-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "tsirelson/error.hpp"

namespace tsirelson {

/*
 * Exact rational number over 64-bit integers.
 *
 * Values are always kept in lowest terms with a positive denominator.
 * Intermediate products are formed in 128 bits and reduced before being
 * narrowed back; a result that does not fit raises ErrorCode::kOverflow
 * instead of wrapping. There is no conversion from floating point.
 */
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() = default;
  constexpr Rational(int_type n) : num_(n), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(int_type n, int_type d) { assign(n, d); }

  constexpr int_type num() const { return num_; }
  constexpr int_type den() const { return den_; }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_integer() const { return den_ == 1; }
  constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Rational inverse() const {
    if (num_ == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
    return from_wide(den_, num_);
  }

  // Largest integer <= value.
  int_type floor() const {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  int_type ceil() const {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  Rational operator-() const {
    if (num_ == std::numeric_limits<int_type>::min())
      throw Error(ErrorCode::kOverflow, "negation");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide(a.num_) + b.num_, a.den_);
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(wide(a.num_) - b.num_, a.den_);
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  // Accepts "p" or "p/q" with an optional sign on p and q > 0.
  static Rational parse(std::string_view text) {
    auto fail = [&] {
      return Error(ErrorCode::kMalformedRational,
                   "cannot parse rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw fail();
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) {
      if (part.empty()) throw fail();
      if (part.front() == '+') {
        if (!allow_sign) throw fail();
        part.remove_prefix(1);
      }
      if (part.empty() || (!allow_sign && part.front() == '-')) throw fail();
      int_type v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size()) throw fail();
      return v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    const int_type n = parse_int(text.substr(0, slash), true);
    const int_type d = parse_int(text.substr(slash + 1), false);
    if (d <= 0) throw fail();
    return Rational(n, d);
  }

  // Lowest-terms invariant; exercised after every operation when
  // TSIRELSON_CHECK_INVARIANTS is defined.
  bool is_normalized() const {
    if (den_ <= 0) return false;
    if (num_ == 0) return den_ == 1;
    return gcd(unsigned_abs(num_), static_cast<uwide>(den_)) == 1;
  }

 private:
  using swide = __int128;
  using uwide = unsigned __int128;

  static constexpr swide wide(int_type v) { return static_cast<swide>(v); }
  static constexpr uwide unsigned_abs(swide v) {
    return v < 0 ? static_cast<uwide>(-(v + 1)) + 1 : static_cast<uwide>(v);
  }
  static constexpr uwide gcd(uwide a, uwide b) {
    while (b != 0) {
      uwide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(swide n, swide d) {
    if (d == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Rational r;
    if (n == 0) {
      r.num_ = 0;
      r.den_ = 1;
      return r;
    }
    const uwide g = gcd(unsigned_abs(n), static_cast<uwide>(d));
    n /= static_cast<swide>(g);
    d /= static_cast<swide>(g);
    constexpr swide lo = std::numeric_limits<int_type>::min();
    constexpr swide hi = std::numeric_limits<int_type>::max();
    if (n < lo || n > hi || d > hi)
      throw Error(ErrorCode::kOverflow, "rational exceeds 64-bit range");
    r.num_ = static_cast<int_type>(n);
    r.den_ = static_cast<int_type>(d);
#ifdef TSIRELSON_CHECK_INVARIANTS
    if (!r.is_normalized()) throw Error(ErrorCode::kVerificationFailure, "unnormalized rational");
#endif
    return r;
  }

  void assign(int_type n, int_type d) { *this = from_wide(n, d); }

  int_type num_ = 0;
  int_type den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace tsirelson
