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

// Vectors, index sets, sign patterns, ordinals and contexts.

#include <map>
#include <random>
#include <vector>

#include "test_util.hpp"

namespace tsirelson {
namespace {

using testing::Ctx;
using testing::Q;
using testing::V;

SparseVector random_vector(std::mt19937_64& rng, Index max_index) {
  std::vector<SparseVector::Entry> e;
  for (Index i = 1; i <= max_index; ++i) {
    if (rng() % 3) continue;
    const auto p = static_cast<std::int64_t>(rng() % 9) - 4;
    if (p == 0) continue;
    e.emplace_back(i, Rational(p, static_cast<std::int64_t>(rng() % 4) + 1));
  }
  return SparseVector(std::move(e));
}

IndexSet random_set(std::mt19937_64& rng, Index max_index) {
  std::vector<Index> e;
  for (Index i = 1; i <= max_index; ++i)
    if (rng() % 2) e.push_back(i);
  return IndexSet(std::move(e));
}

TEST(SparseVector, RejectsBadEntries) {
  EXPECT_ERROR_CODE(SparseVector({{0, 1}}), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(SparseVector({{3, 1}, {2, 1}}), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(SparseVector({{2, 1}, {2, 1}}), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(SparseVector({{2, 0}}), ErrorCode::kZeroCoefficient);
}

TEST(SparseVector, Accessors) {
  const auto x = V("2:1/2,5:-3");
  EXPECT_EQ(x.support(), IndexSet({2, 5}));
  EXPECT_EQ(x.min_index(), 2);
  EXPECT_EQ(x.max_index(), 5);
  EXPECT_EQ(x[5], Rational(-3));
  EXPECT_EQ(x[4], Rational(0));
  EXPECT_TRUE(SparseVector().is_zero());
}

TEST(SparseVector, ArithmeticCancelsToZero) {
  const auto x = V("1:1,3:1/2");
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(x + V("3:-1/2,4:2"), V("1:1,4:2"));
  EXPECT_EQ(x * Q("2"), V("1:2,3:1"));
  EXPECT_TRUE((x * Rational(0)).is_zero());
  EXPECT_EQ(x / Q("1/2"), V("1:2,3:1"));
}

TEST(Project, Examples) {
  EXPECT_EQ(project(V("1:1,2:1,3:1"), IndexSet{2, 3}), V("2:1,3:1"));
  EXPECT_TRUE(project(V("1:1,2:1"), IndexSet{}).is_zero());
  EXPECT_EQ(project(V("4:1/2,7:-2/3"), IndexSet{7, 9}), V("7:-2/3"));
}

TEST(SupNorm, Examples) {
  EXPECT_EQ(sup_norm(V("2:1,3:1")), Rational(1));
  EXPECT_EQ(sup_norm(SparseVector()), Rational(0));
  EXPECT_EQ(sup_norm(V("1:1/2,5:-2/3")), Q("2/3"));
}

TEST(Ell1Norm, Examples) {
  EXPECT_EQ(ell1_norm(V("2:1,3:1")), Rational(2));
  EXPECT_EQ(ell1_norm(SparseVector()), Rational(0));
  EXPECT_EQ(ell1_norm(V("1:1/2,5:-2/3")), Q("7/6"));
}

TEST(FlipSigns, Examples) {
  EXPECT_EQ(flip_signs(V("1:1,2:1"), SignPattern::all(-1)), V("1:-1,2:-1"));
  const auto x = V("2:1/3,4:-5");
  EXPECT_EQ(flip_signs(x, SignPattern::all(1)), x);
  EXPECT_EQ(flip_signs(V("3:1,5:-1"), SignPattern({{3, -1}}, 1)), V("3:-1,5:-1"));
}

TEST(SignPattern, RejectsNonUnitSigns) {
  EXPECT_ERROR_CODE(SignPattern(0), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(SignPattern({{1, 2}}, 1), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(SignPattern({{0, 1}}, 1), ErrorCode::kMalformedIndex);
}

TEST(Spread, Examples) {
  EXPECT_EQ(spread(V("1:1,2:1"), {{1, 3}, {2, 4}}), V("3:1,4:1"));
  const auto x = V("2:1,5:-1/2");
  EXPECT_EQ(spread(x, {{2, 2}, {5, 5}}), x);
  EXPECT_EQ(spread(V("2:1/2"), {{2, 9}}), V("9:1/2"));
}

TEST(Spread, RejectsBadMaps) {
  EXPECT_ERROR_CODE(spread(V("2:1"), {{2, 1}}), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(spread(V("1:1,2:1"), {{1, 5}, {2, 5}}), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(spread(V("1:1,2:1"), {{1, 5}}), ErrorCode::kInvalidArgument);
}

TEST(VectorText, Examples) {
  EXPECT_EQ(V("2:1,3:1"), SparseVector({{2, 1}, {3, 1}}));
  EXPECT_EQ(V("1:1/2,5:-2/3"), SparseVector({{1, Q("1/2")}, {5, Q("-2/3")}}));
  EXPECT_ERROR_CODE(V("3:0"), ErrorCode::kZeroCoefficient);
  EXPECT_TRUE(V("").is_zero());
  EXPECT_EQ(format_vector(V("1:1/2,5:-2/3")), "1:1/2,5:-2/3");
}

TEST(VectorText, RejectsMalformedInput) {
  EXPECT_ERROR_CODE(V("0:1"), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(V("-1:1"), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(V("2:1,2:1"), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(V("3:1,2:1"), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(V("2:1/0"), ErrorCode::kMalformedRational);
  EXPECT_ERROR_CODE(V("2:x"), ErrorCode::kMalformedRational);
  EXPECT_ANY_THROW(V("2"));
  EXPECT_ANY_THROW(V("2:1,"));
}

TEST(IndexSet, BasicsAndText) {
  const auto s = IndexSet::parse("2,4,5");
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.min(), 2);
  EXPECT_EQ(s.max(), 5);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(3));
  EXPECT_EQ(s.to_string(), "{2,4,5}");
  EXPECT_EQ(IndexSet::interval(3, 5), IndexSet({3, 4, 5}));
  EXPECT_TRUE(IndexSet::parse("").empty());
  EXPECT_EQ(s.intersect(IndexSet{1, 2, 5, 9}), IndexSet({2, 5}));
  EXPECT_ERROR_CODE(IndexSet({3, 2}), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(IndexSet({0}), ErrorCode::kMalformedIndex);
  EXPECT_ERROR_CODE(IndexSet::parse("1,1"), ErrorCode::kMalformedIndex);
}

// Properties over random vectors and sets.

TEST(CoreProperties, TextRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_vector(rng, 12);
    EXPECT_EQ(parse_vector(format_vector(x)), x);
  }
}

TEST(CoreProperties, ProjectionComposes) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_vector(rng, 10);
    const auto e = random_set(rng, 10), f = random_set(rng, 10);
    EXPECT_EQ(project(project(x, e), f), project(x, e.intersect(f)));
  }
}

TEST(CoreProperties, SignFlipsPreserveSupAndEll1) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_vector(rng, 10);
    std::map<Index, int> table;
    for (Index j = 1; j <= 10; ++j) table[j] = rng() % 2 ? 1 : -1;
    const SignPattern s(table, rng() % 2 ? 1 : -1);
    EXPECT_EQ(sup_norm(flip_signs(x, s)), sup_norm(x));
    EXPECT_EQ(ell1_norm(flip_signs(x, s)), ell1_norm(x));
  }
}

TEST(Ordinal, OrderAndClassification) {
  const auto zero = Ordinal::finite(0), three = Ordinal::finite(3), w = Ordinal::omega(),
             w2 = Ordinal::omega_plus(2);
  EXPECT_LT(zero, three);
  EXPECT_LT(three, w);
  EXPECT_LT(Ordinal::finite(1000000), w);
  EXPECT_LT(w, w2);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.is_successor());
  EXPECT_TRUE(w.is_limit());
  EXPECT_FALSE(w.is_successor());
  EXPECT_TRUE(w2.is_successor());
  EXPECT_EQ(three.predecessor(), Ordinal::finite(2));
  EXPECT_EQ(w2.predecessor(), Ordinal::omega_plus(1));
  EXPECT_EQ(Ordinal::omega_plus(1).predecessor(), w);
  EXPECT_ERROR_CODE(w.predecessor(), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(zero.predecessor(), ErrorCode::kInvalidArgument);
}

TEST(Ordinal, Text) {
  for (auto s : {"0", "1", "17", "w", "w+1", "w+12"}) EXPECT_EQ(Ordinal::parse(s).to_string(), s);
  for (auto s : {"", "-1", "w+", "w+-1", "ww", "x", "1.0", "w+0x"})
    { SCOPED_TRACE(s); EXPECT_ERROR_CODE(Ordinal::parse(s), ErrorCode::kMalformedOrdinal); }
}

TEST(NormContext, ValidatesThetaAndDerivesFloorCeil) {
  const auto c = Ctx("2/5", "1");
  EXPECT_EQ(c.floor_inv_theta(), 2);
  EXPECT_EQ(c.ceil_inv_theta(), 3);
  EXPECT_FALSE(c.inverse_theta_is_integer());
  EXPECT_TRUE(Ctx("1/3", "w").inverse_theta_is_integer());
  EXPECT_EQ(Ctx("3/7", "2").ceil_inv_theta(), 3);
  EXPECT_ERROR_CODE(Ctx("3/4", "1"), ErrorCode::kThetaOutOfRange);
  EXPECT_ERROR_CODE(Ctx("0", "1"), ErrorCode::kThetaOutOfRange);
  EXPECT_ERROR_CODE(Ctx("-1/3", "1"), ErrorCode::kThetaOutOfRange);
  EXPECT_ERROR_CODE(Ctx("1", "1"), ErrorCode::kThetaOutOfRange);
  EXPECT_NO_THROW(Ctx("1/2", "1"));
}

}  // namespace
}  // namespace tsirelson
