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

// JSON views of reports and witnesses. Rationals are always strings and
// vectors use the "i:p/q,..." text form, so consumers never see floats.
// Needs nlohmann/json (vendored as json.hpp).

#pragma once

#include <string>

#include <json.hpp>

#include "tsirelson/harness.hpp"
#include "tsirelson/isometry.hpp"
#include "tsirelson/norm.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tsirelson-lab/1";

inline Json to_json(const IndexSet& s) { return Json(s.elements()); }

inline Json to_json(const Counterexample& c) {
  return Json{{"x", format_vector(c.x)}, {"y", format_vector(c.y)}, {"lhs", c.lhs.to_string()},
              {"rhs", c.rhs.to_string()}};
}

inline Json to_json(const CheckReport& r) {
  Json j{{"status", to_string(r.status)}, {"pairs_checked", r.pairs_checked}};
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  return j;
}

inline Json to_json(const NormWitness& w, const SparseVector& x, const Rational& theta) {
  if (w.is_leaf()) return Json{{"sup", w.leaf_index()}, {"value", x[w.leaf_index()].abs().to_string()}};
  Json blocks = Json::array();
  for (auto& b : w.partition().blocks()) blocks.push_back(to_json(b));
  Json children = Json::array();
  for (std::size_t i = 0; i < w.children().size(); ++i)
    children.push_back(to_json(w.children()[i], project(x, w.partition().blocks()[i]), theta));
  return Json{{"value", w.reconstruct(x, theta).to_string()},
              {"minima", to_json(w.partition().minima())},
              {"blocks", std::move(blocks)},
              {"children", std::move(children)}};
}

// Elapsed time is deliberately absent: identical runs must serialize
// byte-identically.
inline Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}});
  Json ces = Json::array();
  for (auto& c : r.counterexamples) {
    Json j{{"check", c.check}};
    if (c.map) j["map"] = *c.map;
    j["expected"] = c.expected;
    const Json data = to_json(c.data);
    for (auto& [k, v] : data.items()) j[k] = v;
    ces.push_back(std::move(j));
  }
  return Json{{"schema", kSchema},
              {"suite", r.suite},
              {"theta", r.context.theta().to_string()},
              {"alpha", r.context.alpha().to_string()},
              {"status", r.passed() ? "pass" : "fail"},
              {"checks", std::move(checks)},
              {"counterexamples", std::move(ces)},
              {"pairs_checked", r.pairs_checked}};
}

}  // namespace tsirelson
