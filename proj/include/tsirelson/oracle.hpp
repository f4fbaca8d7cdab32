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

// Exponential reference implementations used to cross-check schreier.hpp and
// norm.hpp. Neither shares code paths with the fast versions: membership
// enumerates every consecutive split literally, and the norm enumerates every
// family of consecutive subsets of {1..max supp}.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <map>
#include <utility>
#include <vector>

#include "tsirelson/context.hpp"
#include "tsirelson/error.hpp"
#include "tsirelson/ordinal.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson {

inline constexpr std::size_t kBruteForceMaxSupport = 8;
inline constexpr Index kBruteForceMaxIndex = 10;

// Membership straight from the recursive definition. For ω it tries every
// n <= min F rather than relying on the families being nested.
class DefinitionalSchreier {
 public:
  bool member(const std::vector<Index>& f, const Ordinal& alpha) {
    if (f.empty()) return true;
    const auto key = std::make_pair(f, alpha.to_string());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    if (alpha.is_zero()) {
      result = f.size() == 1;
    } else if (alpha.is_limit()) {
      for (Index n = 1; n <= f.front() && !result; ++n) result = member(f, Ordinal::finite(n));
    } else {
      result = splits(f, 0, f.front(), alpha.predecessor());
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  // Can f[pos..] be cut into at most `budget` consecutive members of S_beta?
  bool splits(const std::vector<Index>& f, std::size_t pos, Index budget, const Ordinal& beta) {
    if (pos == f.size()) return true;
    if (budget == 0) return false;
    for (std::size_t end = pos + 1; end <= f.size(); ++end) {
      std::vector<Index> block(f.begin() + pos, f.begin() + end);
      if (member(block, beta) && splits(f, end, budget - 1, beta)) return true;
    }
    return false;
  }

  std::map<std::pair<std::vector<Index>, std::string>, bool> memo_;
};

/*
 * ‖x‖ = max{‖x‖_∞, θ Σ ‖E_i x‖} with E_1 < ... < E_d ranging over ALL
 * families of nonempty consecutive subsets of {1..max supp x} whose minima
 * lie in S_α. A family containing a block with E_i x = x is skipped: it is
 * worth at most θ‖x‖ < ‖x‖ and would recurse on x itself. Blocks starting
 * beyond max supp only add zero terms and extra minima, so the universe
 * {1..max supp} loses nothing.
 *
 * One instance keeps a memo of sub-vector norms, which makes exhaustive
 * sweeps affordable. Not thread safe.
 */
class BruteForceNorm {
 public:
  explicit BruteForceNorm(NormContext ctx) : ctx_(std::move(ctx)) {}

  Rational operator()(const SparseVector& x) {
    if (x.support_size() > kBruteForceMaxSupport)
      throw Error(ErrorCode::kSupportTooLarge, "brute force needs |supp| <= 8");
    if (x.max_index() > kBruteForceMaxIndex)
      throw Error(ErrorCode::kSupportTooLarge, "brute force needs max supp <= 10");
    return eval(x);
  }

 private:
  Rational eval(const SparseVector& x) {
    if (x.is_zero()) return 0;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;

    const int m = static_cast<int>(x.max_index());
    std::uint32_t supp = 0;
    for (auto& [i, a] : x) supp |= std::uint32_t{1} << (i - 1);

    // Norms of E x for every E ⊆ supp, keyed by E ∩ supp.
    std::map<std::uint32_t, Rational> sub;
    auto sub_norm = [&](std::uint32_t part) -> Rational {
      if (auto it = sub.find(part); it != sub.end()) return it->second;
      std::vector<SparseVector::Entry> e;
      for (auto& entry : x)
        if (part >> (entry.first - 1) & 1) e.push_back(entry);
      Rational v = eval(SparseVector(std::move(e)));
      sub.emplace(part, v);
      return v;
    };

    Rational best = 0;
    for (auto& [i, a] : x) best = std::max(best, a.abs());

    std::vector<Index> minima;
    std::uint32_t minima_mask = 0;
    // Blocks are subsets of {start..m}; bit k stands for index k + 1.
    auto rec = [&](auto& self, int start, const Rational& sum) -> void {
      const int width = m - start + 1;
      if (width <= 0) return;
      for (std::uint32_t local = 1; local < (std::uint32_t{1} << width); ++local) {
        const std::uint32_t block = local << (start - 1);
        const std::uint32_t part = block & supp;
        if (part == supp) continue;
        const int lo = std::countr_zero(block) + 1;
        const int hi = 32 - std::countl_zero(block);
        const Rational total = sum + (part ? sub_norm(part) : Rational(0));
        minima.push_back(lo);
        minima_mask |= std::uint32_t{1} << (lo - 1);
        if (admissible(minima, minima_mask)) best = std::max(best, ctx_.theta() * total);
        self(self, hi + 1, total);
        minima_mask &= ~(std::uint32_t{1} << (lo - 1));
        minima.pop_back();
      }
    };
    rec(rec, 1, Rational(0));
    memo_.emplace(x, best);
    return best;
  }

  bool admissible(const std::vector<Index>& minima, std::uint32_t mask) {
    auto& slot = admissible_[mask];
    if (slot == 0) slot = family_.member(minima, ctx_.alpha()) ? 1 : 2;
    return slot == 1;
  }

  NormContext ctx_;
  DefinitionalSchreier family_;
  std::vector<std::uint8_t> admissible_ = std::vector<std::uint8_t>(std::size_t{1} << kBruteForceMaxIndex, 0);
  std::map<SparseVector, Rational> memo_;
};

inline Rational brute_force_norm(const SparseVector& x, const NormContext& ctx) {
  return BruteForceNorm(ctx)(x);
}

}  // namespace tsirelson
