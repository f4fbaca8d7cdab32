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

/*
 * Schreier families S_α for α < ω·2.
 *
 *   S_0     = sets with at most one element.
 *   S_{β+1} = unions S^1 < ... < S^d of S_β-sets with d <= min S^1, plus ∅.
 *   S_ω     = sets F with F ∈ S_n for some n <= min F, using the cofinal
 *             sequence α_n = n (each a successor, β_n = n - 1).
 *
 * Membership of S_ω is decided as F ∈ S_{min F}. This is equivalent to the
 * "some n <= min F" form because the finite families are nested,
 * S_n ⊆ S_{n+1} (take d = 1). The equivalence is checked against the
 * definitional oracle in oracle.hpp.
 *
 * Implementation: for a fixed nonempty F = {f_0 < ... < f_{n-1}} and family
 * G, reach_G(s) is the largest position e with {f_s..f_e} ∈ G. Because every
 * S_β is hereditary, a contiguous run fits in G exactly when it ends at or
 * before reach_G(s), and splitting greedily into longest runs uses the
 * fewest blocks. So
 *
 *   reach_{β+1}(s) = position reached after f_s greedy jumps through
 *                    reach_β, minus one,
 *
 * and F ∈ G iff reach_G(0) = n - 1. reach arrays only grow with the level
 * and are bounded by n, so the finite levels stabilize; once a level
 * repeats, every higher level is identical.
 *
 * All functions are pure; nothing is cached across calls.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsirelson/error.hpp"
#include "tsirelson/ordinal.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson {

inline constexpr int kDefaultEnumerationBound = 16;
inline constexpr std::size_t kDefaultMaximalSetCap = std::size_t{1} << 16;

namespace detail {

using Reach = std::vector<std::size_t>;

inline Reach identity_reach(std::size_t n) {
  Reach r(n);
  for (std::size_t s = 0; s < n; ++s) r[s] = s;
  return r;
}

// One successor step: runs of at most f_s blocks from `lower`.
inline Reach lift_reach(std::span<const Index> f, const Reach& lower) {
  const std::size_t n = f.size();
  Reach out(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t p = s;
    for (Index steps = f[s]; steps > 0 && p < n; --steps) p = lower[p] + 1;
    out[s] = p - 1;
  }
  return out;
}

inline Reach s1_reach(std::span<const Index> f) {
  const std::size_t n = f.size();
  Reach out(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto room = static_cast<std::size_t>(std::min<Index>(f[s], static_cast<Index>(n - s)));
    out[s] = s + room - 1;
  }
  return out;
}

inline Reach finite_reach(std::span<const Index> f, std::int64_t level) {
  if (level == 0) return identity_reach(f.size());
  Reach r = s1_reach(f);
  for (std::int64_t k = 2; k <= level; ++k) {
    Reach next = lift_reach(f, r);
    if (next == r) break;
    r = std::move(next);
  }
  return r;
}

// reach_ω(s) = reach_{f_s}(s).
inline Reach omega_reach(std::span<const Index> f) {
  const std::size_t n = f.size();
  Reach out(n);
  const Index top = *std::max_element(f.begin(), f.end());
  Reach r = s1_reach(f);
  for (Index level = 1;; ++level) {
    if (level > 1) {
      Reach next = lift_reach(f, r);
      const bool stable = next == r;
      r = std::move(next);
      if (stable) {
        for (std::size_t s = 0; s < n; ++s)
          if (f[s] >= level) out[s] = r[s];
        break;
      }
    }
    for (std::size_t s = 0; s < n; ++s)
      if (f[s] == level) out[s] = r[s];
    if (level >= top) break;
  }
  return out;
}

inline Reach reach(std::span<const Index> f, const Ordinal& alpha) {
  if (f.empty()) return {};
  if (alpha.is_finite()) return finite_reach(f, alpha.offset());
  Reach r = omega_reach(f);
  for (std::int64_t k = 0; k < alpha.offset(); ++k) r = lift_reach(f, r);
  return r;
}

// blocks[p] = fewest consecutive runs from `lower` covering positions p..n-1.
inline std::vector<std::size_t> greedy_block_counts(const Reach& lower) {
  const std::size_t n = lower.size();
  std::vector<std::size_t> g(n + 1, 0);
  for (std::size_t p = n; p-- > 0;) g[p] = 1 + g[lower[p] + 1];
  return g;
}

}  // namespace detail

// F ∈ S_α. The empty set belongs to every family.
inline bool is_member(std::span<const Index> f, const Ordinal& alpha) {
  if (f.empty()) return true;
  if (alpha.is_zero()) return f.size() == 1;
  // S_1 ⊆ S_α for every α >= 1.
  if (static_cast<Index>(f.size()) <= f.front()) return true;
  if (alpha == Ordinal::finite(1)) return false;
  return detail::reach(f, alpha).front() == f.size() - 1;
}

inline bool is_member(const IndexSet& f, const Ordinal& alpha) { return is_member(f.span(), alpha); }

// Witness that F ∈ S_{β+1}: consecutive S_β blocks, at most min F of them.
struct Decomposition {
  std::vector<IndexSet> blocks;
  Ordinal order;  // β
};

// Among all valid decompositions, returns the one whose vector of block
// maxima is lexicographically smallest; std::nullopt iff F ∉ S_α.
inline std::optional<Decomposition> decompose(const IndexSet& f, const Ordinal& alpha) {
  if (!alpha.is_successor())
    throw Error(ErrorCode::kInvalidArgument, "decompose needs a successor ordinal, got " + alpha.to_string());
  if (f.empty()) throw Error(ErrorCode::kInvalidArgument, "decompose needs a nonempty set");
  const Ordinal beta = alpha.predecessor();
  const auto& elems = f.elements();
  const std::size_t n = elems.size();
  const detail::Reach lower = detail::reach(f.span(), beta);
  const auto g = detail::greedy_block_counts(lower);
  const auto budget = static_cast<std::size_t>(std::min<Index>(f.min(), static_cast<Index>(n)));
  if (g[0] > budget) return std::nullopt;

  Decomposition out{{}, beta};
  std::size_t p = 0;
  while (p < n) {
    const std::size_t left = budget - out.blocks.size() - 1;
    std::size_t e = p;
    while (e < lower[p] && g[e + 1] > left) ++e;
    out.blocks.emplace_back(std::vector<Index>(elems.begin() + p, elems.begin() + e + 1));
    p = e + 1;
  }
  return out;
}

// All members of S_α inside {1..n}, ordered by size and then lexicographically.
inline std::vector<IndexSet> enumerate_members(const Ordinal& alpha, int n, int bound = kDefaultEnumerationBound) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "enumeration needs N >= 1");
  if (n > bound || n > 30)
    throw Error(ErrorCode::kBoundExceeded, "N = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<IndexSet> out;
  std::vector<Index> elems;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    elems.clear();
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) elems.push_back(i + 1);
    if (is_member(elems, alpha)) out.emplace_back(elems);
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Longest prefix of the chain start, next(start), next(next(start)), ...
// that lies in S_α. Prefixes of members are members (hereditary), so the
// length is found by doubling and then bisection in O(n log n) membership
// work. More than `cap` elements raises kResourceLimit.
template <class Next>
std::vector<Index> longest_member_chain(Index start, Next next, const Ordinal& alpha, std::size_t cap,
                                        const std::string& what) {
  std::vector<Index> chain{start};
  auto holds = [&](std::size_t len) {
    while (chain.size() < len) chain.push_back(next(chain.back()));
    return is_member(std::span<const Index>(chain.data(), len), alpha);
  };
  std::size_t good = 1, bad = 2;
  while (holds(bad)) {
    good = bad;
    if (good > cap)
      throw Error(ErrorCode::kResourceLimit, what + " exceeds " + std::to_string(cap) + " elements");
    bad = std::min(2 * bad, cap + 1);
  }
  while (bad - good > 1) {
    const std::size_t mid = good + (bad - good) / 2;
    (holds(mid) ? good : bad) = mid;
  }
  chain.resize(good);
  return chain;
}

// Greedy maximal S_α-set starting at m: the longest run m, m+1, ... in S_α.
// By spreading, if some j > max F keeps F ∪ {j} in S_α then so does
// max F + 1, so consecutive candidates are the right ones.
inline IndexSet greedy_maximal(Index m, const Ordinal& alpha, std::size_t cap = kDefaultMaximalSetCap) {
  if (m <= 0) throw Error(ErrorCode::kMalformedIndex, "start must be positive");
  if (alpha.is_zero()) throw Error(ErrorCode::kInvalidArgument, "greedy_maximal needs alpha >= 1");
  return IndexSet(longest_member_chain(
      m, [](Index i) { return i + 1; }, alpha, cap,
      "maximal S_" + alpha.to_string() + "-set from " + std::to_string(m)));
}

// F ∈ S_α is maximal iff F ∪ {max F + 1} ∉ S_α. Checking max F + 1 alone is
// enough: by spreading, any larger extension in S_α would force this one in.
inline bool is_maximal(const IndexSet& f, const Ordinal& alpha) {
  if (!is_member(f, alpha))
    throw Error(ErrorCode::kNotMember, f.to_string() + " is not in S_" + alpha.to_string());
  if (f.empty()) return false;
  return !is_member(f.with(f.max() + 1), alpha);
}

struct RegularityReport {
  bool passed = true;
  std::string property;  // "hereditary" or "spreading" on failure
  IndexSet member;       // a member of S_α ...
  IndexSet witness;      // ... whose subset / right shift is not
  std::size_t members = 0;
};

// Exhaustive hereditary and spreading check over all subsets of {1..n}.
inline RegularityReport check_regularity(const Ordinal& alpha, int n, int bound = kDefaultEnumerationBound) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "regularity check needs N >= 1");
  if (n > bound || n > 24)
    throw Error(ErrorCode::kBoundExceeded, "N = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  const std::uint32_t full = std::uint32_t{1} << n;
  auto to_elems = [n](std::uint32_t mask) {
    std::vector<Index> e;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) e.push_back(i + 1);
    return e;
  };
  std::vector<char> member(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) member[mask] = is_member(to_elems(mask), alpha);

  RegularityReport report;
  auto fail = [&](const char* property, std::uint32_t f, std::uint32_t g) {
    report.passed = false;
    report.property = property;
    report.member = IndexSet(to_elems(f));
    report.witness = IndexSet(to_elems(g));
  };

  for (std::uint32_t f = 0; f < full; ++f) {
    if (!member[f]) continue;
    ++report.members;
    for (std::uint32_t sub = f;; sub = (sub - 1) & f) {
      if (!member[sub]) {
        fail("hereditary", f, sub);
        return report;
      }
      if (sub == 0) break;
    }
  }

  // Every G = {k_1 < ... < k_r} ⊆ {1..n} with k_i >= l_i, for each member
  // F = {l_1 < ... < l_r}.
  for (std::uint32_t f = 0; f < full; ++f) {
    if (!member[f]) continue;
    const auto l = to_elems(f);
    std::vector<Index> k(l.size());
    bool ok = true;
    std::uint32_t bad = 0;
    auto rec = [&](auto&& self, std::size_t i, Index lowest, std::uint32_t mask) -> void {
      if (!ok) return;
      if (i == l.size()) {
        if (!member[mask]) {
          ok = false;
          bad = mask;
        }
        return;
      }
      for (Index v = std::max(l[i], lowest); v <= n; ++v) self(self, i + 1, v + 1, mask | (std::uint32_t{1} << (v - 1)));
    };
    rec(rec, 0, 1, 0);
    if (!ok) {
      fail("spreading", f, bad);
      return report;
    }
  }
  return report;
}

}  // namespace tsirelson
