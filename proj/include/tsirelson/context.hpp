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

#include <cstdint>
#include <string>
#include <string_view>

#include "tsirelson/error.hpp"
#include "tsirelson/ordinal.hpp"
#include "tsirelson/rational.hpp"

namespace tsirelson {

// Parameters (θ, α) of the space T[θ, S_α], with 0 < θ <= 1/2.
class NormContext {
 public:
  NormContext(Rational theta, Ordinal alpha) : theta_(theta), alpha_(alpha) {
    if (theta_ <= Rational(0) || theta_ > Rational(1, 2))
      throw Error(ErrorCode::kThetaOutOfRange, "theta must lie in (0, 1/2], got " + theta_.to_string());
  }

  // Parses θ as "p/q" (or an integer, which is always rejected by range).
  static NormContext parse(std::string_view theta, std::string_view alpha) {
    return NormContext(Rational::parse(theta), Ordinal::parse(alpha));
  }

  const Rational& theta() const { return theta_; }
  const Ordinal& alpha() const { return alpha_; }

  Rational inverse_theta() const { return theta_.inverse(); }
  std::int64_t floor_inv_theta() const { return inverse_theta().floor(); }
  std::int64_t ceil_inv_theta() const { return inverse_theta().ceil(); }
  bool inverse_theta_is_integer() const { return inverse_theta().is_integer(); }

  std::string to_string() const { return "theta=" + theta_.to_string() + " alpha=" + alpha_.to_string(); }

  friend bool operator==(const NormContext&, const NormContext&) = default;

 private:
  Rational theta_;
  Ordinal alpha_;
};

}  // namespace tsirelson
