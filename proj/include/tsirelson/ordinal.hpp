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
#include <ostream>
#include <string>
#include <string_view>

#include "tsirelson/error.hpp"

namespace tsirelson {

// Ordinals below ω·2: either a natural number n or ω + n.
class Ordinal {
 public:
  enum class Kind { kFinite, kOmegaPlus };

  constexpr Ordinal() = default;

  static constexpr Ordinal finite(std::int64_t n) { return Ordinal(Kind::kFinite, n); }
  static constexpr Ordinal omega_plus(std::int64_t n) { return Ordinal(Kind::kOmegaPlus, n); }
  static constexpr Ordinal omega() { return omega_plus(0); }

  constexpr Kind kind() const { return kind_; }
  constexpr std::int64_t offset() const { return n_; }

  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_zero() const { return is_finite() && n_ == 0; }
  constexpr bool is_limit() const { return kind_ == Kind::kOmegaPlus && n_ == 0; }
  constexpr bool is_successor() const { return n_ > 0; }

  Ordinal predecessor() const {
    if (!is_successor())
      throw Error(ErrorCode::kInvalidArgument, to_string() + " has no predecessor");
    return Ordinal(kind_, n_ - 1);
  }
  constexpr Ordinal successor() const { return Ordinal(kind_, n_ + 1); }

  friend constexpr bool operator==(const Ordinal&, const Ordinal&) = default;
  friend constexpr std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    if (a.kind_ != b.kind_) return a.kind_ == Kind::kFinite ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
    return a.n_ <=> b.n_;
  }

  // "0", "1", ..., "w", "w+n".
  std::string to_string() const {
    if (is_finite()) return std::to_string(n_);
    return n_ == 0 ? "w" : "w+" + std::to_string(n_);
  }

  static Ordinal parse(std::string_view text) {
    auto fail = [&] {
      return Error(ErrorCode::kMalformedOrdinal, "cannot parse ordinal '" + std::string(text) + "'");
    };
    auto parse_nat = [&](std::string_view s) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw fail();
      return v;
    };
    if (text == "w") return omega();
    if (text.size() > 2 && text.substr(0, 2) == "w+") return omega_plus(parse_nat(text.substr(2)));
    return finite(parse_nat(text));
  }

 private:
  constexpr Ordinal(Kind k, std::int64_t n) : kind_(k), n_(n) {}

  Kind kind_ = Kind::kFinite;
  std::int64_t n_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.to_string(); }

}  // namespace tsirelson
