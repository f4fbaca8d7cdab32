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

#include <cstdint>
#include <vector>

#include "test_util.hpp"

namespace tsirelson {
namespace {

const Ordinal k0 = Ordinal::finite(0);
const Ordinal k1 = Ordinal::finite(1);
const Ordinal k2 = Ordinal::finite(2);
const Ordinal k3 = Ordinal::finite(3);
const Ordinal kW = Ordinal::omega();
const Ordinal kW1 = Ordinal::omega_plus(1);

std::vector<Index> elems_of(std::uint32_t mask, int n) {
  std::vector<Index> e;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) e.push_back(i + 1);
  return e;
}

TEST(IsMember, Examples) {
  for (auto a : {k0, k1, k2, kW, kW1}) {
    EXPECT_TRUE(is_member(IndexSet{7}, a));
    EXPECT_TRUE(is_member(IndexSet{}, a));
  }
  EXPECT_FALSE(is_member(IndexSet{1, 2}, k1));
  EXPECT_TRUE(is_member(IndexSet{2, 4, 5, 6, 7}, k2));
  EXPECT_FALSE(is_member(IndexSet{1, 2}, kW));
  EXPECT_TRUE(is_member(IndexSet{2, 3}, kW));
  EXPECT_FALSE(is_member(IndexSet{2, 3}, k0));
  EXPECT_TRUE(is_member(IndexSet{3, 4, 5}, k1));
  EXPECT_FALSE(is_member(IndexSet{3, 4, 5, 6}, k1));
  EXPECT_TRUE(is_member(IndexSet{2, 4, 5, 6, 7, 8}, k2));  // {2, 4} then {5..8}
  EXPECT_FALSE(is_member(IndexSet{2, 4, 5, 6, 7, 8, 9, 10}, k2));
  EXPECT_TRUE(is_member(IndexSet::interval(2, 7), k2));
}

TEST(Decompose, Examples) {
  auto d = decompose(IndexSet{2, 4, 5, 6, 7}, k2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->blocks, (std::vector<IndexSet>{IndexSet{2}, IndexSet{4, 5, 6, 7}}));
  EXPECT_EQ(d->order, k1);

  d = decompose(IndexSet{3, 4, 5}, k1);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->blocks, (std::vector<IndexSet>{IndexSet{3}, IndexSet{4}, IndexSet{5}}));
  EXPECT_EQ(d->order, k0);

  EXPECT_FALSE(decompose(IndexSet{1, 3}, k2));
}

TEST(Decompose, RejectsNonSuccessorOrdersAndEmptySets) {
  EXPECT_ERROR_CODE(decompose(IndexSet{2, 3}, kW), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(decompose(IndexSet{2, 3}, k0), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(decompose(IndexSet{}, k1), ErrorCode::kInvalidArgument);
}

TEST(EnumerateMembers, Examples) {
  EXPECT_EQ(enumerate_members(k0, 3), (std::vector<IndexSet>{IndexSet{}, IndexSet{1}, IndexSet{2}, IndexSet{3}}));
  EXPECT_EQ(enumerate_members(k1, 3),
            (std::vector<IndexSet>{IndexSet{}, IndexSet{1}, IndexSet{2}, IndexSet{3}, IndexSet{2, 3}}));
  EXPECT_ERROR_CODE(enumerate_members(k1, 17), ErrorCode::kBoundExceeded);
  EXPECT_NO_THROW(enumerate_members(k1, 17, 17));
}

TEST(EnumerateMembers, S1CountMatchesSizeAtMostMinFilter) {
  for (int n = 1; n <= 14; ++n) {
    std::size_t expected = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto e = elems_of(mask, n);
      if (e.empty() || static_cast<Index>(e.size()) <= e.front()) ++expected;
    }
    EXPECT_EQ(enumerate_members(k1, n).size(), expected) << n;
  }
}

TEST(GreedyMaximal, Examples) {
  EXPECT_EQ(greedy_maximal(3, k1), IndexSet({3, 4, 5}));
  EXPECT_EQ(greedy_maximal(1, k1), IndexSet({1}));
  // {2,3} ∪ {4..7}: a ninth element would need a third S_1 block.
  EXPECT_EQ(greedy_maximal(2, k2), IndexSet::interval(2, 7));
  EXPECT_EQ(greedy_maximal(3, k2), IndexSet::interval(3, 23));
  EXPECT_ERROR_CODE(greedy_maximal(2, k0), ErrorCode::kInvalidArgument);
  EXPECT_ERROR_CODE(greedy_maximal(40, k2, 1000), ErrorCode::kResourceLimit);
}

TEST(IsMaximal, Examples) {
  EXPECT_TRUE(is_maximal(IndexSet{3, 4, 5}, k1));
  EXPECT_TRUE(is_maximal(IndexSet{2, 3}, k1));
  EXPECT_FALSE(is_maximal(IndexSet{2}, k1));
  EXPECT_TRUE(is_maximal(IndexSet{1}, k1));
  EXPECT_ERROR_CODE(is_maximal(IndexSet{1, 2}, k1), ErrorCode::kNotMember);
}

TEST(CheckRegularity, Examples) {
  for (auto a : {k1, k2, kW}) {
    const auto r = check_regularity(a, 10);
    EXPECT_TRUE(r.passed) << a << " " << r.property << " " << r.member << " " << r.witness;
  }
  EXPECT_ERROR_CODE(check_regularity(k1, 17), ErrorCode::kBoundExceeded);
}

// --- properties ---

TEST(SchreierProperties, MatchesDefinitionalBruteForce) {
  DefinitionalSchreier oracle;
  const int n = 10;
  for (auto a : {k0, k1, k2, k3, kW, kW1, Ordinal::omega_plus(2)}) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto e = elems_of(mask, n);
      ASSERT_EQ(is_member(e, a), oracle.member(e, a)) << a << " " << IndexSet(e);
    }
  }
}

TEST(SchreierProperties, FamiliesAreNested) {
  const int n = 12;
  const std::vector<Ordinal> chain{k0, k1, k2, k3, Ordinal::finite(4), kW, kW1, Ordinal::omega_plus(2)};
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto e = elems_of(mask, n);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (chain[i + 1] == kW) continue;  // S_4 ⊄ S_ω for sets with min < 4
      if (is_member(e, chain[i])) ASSERT_TRUE(is_member(e, chain[i + 1])) << chain[i] << " " << IndexSet(e);
    }
    // S_ω ∩ {min F = m} = S_m ∩ {min F = m}
    if (!e.empty()) ASSERT_EQ(is_member(e, kW), is_member(e, Ordinal::finite(e.front())));
  }
}

TEST(SchreierProperties, DecomposeExistsIffMember) {
  const int n = 10;
  for (auto a : {k1, k2, k3, kW1}) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const IndexSet f(elems_of(mask, n));
      const auto d = decompose(f, a);
      ASSERT_EQ(d.has_value(), is_member(f, a)) << a << " " << f;
      if (!d) continue;
      // The decomposition is genuine: consecutive blocks of order β, at most min F of them.
      ASSERT_LE(static_cast<Index>(d->blocks.size()), f.min());
      std::vector<Index> joined;
      for (std::size_t i = 0; i < d->blocks.size(); ++i) {
        ASSERT_TRUE(is_member(d->blocks[i], d->order));
        if (i) ASSERT_LT(d->blocks[i - 1].max(), d->blocks[i].min());
        joined.insert(joined.end(), d->blocks[i].begin(), d->blocks[i].end());
      }
      ASSERT_EQ(IndexSet(joined), f);
    }
  }
}

TEST(SchreierProperties, DecomposeIsLexSmallestByBlockMaxima) {
  // Compare against every decomposition found by brute force on {1..9}.
  const int n = 9;
  for (auto a : {k1, k2, k3}) {
    const Ordinal beta = a.predecessor();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const auto e = elems_of(mask, n);
      const auto d = decompose(IndexSet(e), a);
      if (!d) continue;
      std::vector<Index> got;
      for (auto& b : d->blocks) got.push_back(b.max());
      // Enumerate cut masks between consecutive elements.
      const std::size_t m = e.size();
      for (std::uint32_t cuts = 0; cuts < (1u << (m - 1)); ++cuts) {
        std::vector<Index> maxima;
        std::vector<Index> block{e[0]};
        bool ok = true;
        for (std::size_t i = 1; i <= m && ok; ++i) {
          if (i == m || (cuts >> (i - 1) & 1)) {
            ok = is_member(block, beta);
            maxima.push_back(block.back());
            block.clear();
          }
          if (i < m) block.push_back(e[i]);
        }
        if (!ok || static_cast<Index>(maxima.size()) > e.front()) continue;
        ASSERT_LE(got, maxima) << IndexSet(e);
      }
    }
  }
}

TEST(SchreierProperties, GreedyMaximalIsMaximalMember) {
  for (Index m = 1; m <= 8; ++m) {
    for (auto a : {k1, k2}) {
      const auto f = greedy_maximal(m, a);
      EXPECT_TRUE(is_member(f, a));
      EXPECT_TRUE(is_maximal(f, a));
      EXPECT_EQ(f.min(), m);
    }
  }
}

TEST(SchreierProperties, RegularOnTwelve) {
  for (auto a : {k0, k1, k2, k3, kW, kW1}) {
    const auto r = check_regularity(a, 12);
    EXPECT_TRUE(r.passed) << a << " " << r.property << " " << r.member << " " << r.witness;
  }
}

TEST(SchreierProperties, RegularityMemberCountMatchesEnumeration) {
  for (auto a : {k1, k2, kW}) EXPECT_EQ(check_regularity(a, 9).members, enumerate_members(a, 9).size()) << a;
}

}  // namespace
}  // namespace tsirelson
