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

#include <gtest/gtest.h>

#include <string_view>

#include "tsirelson/tsirelson.hpp"

namespace tsirelson::testing {

inline SparseVector V(std::string_view text) { return parse_vector(text); }
inline Rational Q(std::string_view text) { return Rational::parse(text); }
inline NormContext Ctx(std::string_view theta, std::string_view alpha) { return NormContext::parse(theta, alpha); }

}  // namespace tsirelson::testing

// Asserts that `stmt` throws tsirelson::Error carrying `expected_code`.
#define EXPECT_ERROR_CODE(stmt, expected_code)                              \
  do {                                                                      \
    try {                                                                   \
      (void)(stmt);                                                         \
      ADD_FAILURE() << "expected " << ::tsirelson::to_string(expected_code); \
    } catch (const ::tsirelson::Error& e) {                                 \
      EXPECT_EQ(e.code(), expected_code) << e.what();                       \
    }                                                                       \
  } while (0)
