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
 * Exact Tsirelson norm ‖x‖ on T[θ, S_α] for finitely supported x:
 *
 *   ‖x‖ = max{ ‖x‖_∞, sup θ Σ_i ‖E_i x‖ }
 *
 * the supremum taken over E_1 < ... < E_d with {min E_i} ∈ S_α.
 *
 * Canonical partitions. Write the support as s_0 < ... < s_{n-1}. It is
 * enough to pick minima at support points p_1 < ... < p_d with
 * {s_{p_i}} ∈ S_α and to let block i be the support points in
 * [s_{p_i}, s_{p_{i+1}}) (the last block runs to the end of the window):
 *   - moving a block's minimum up to its first support point keeps the
 *     minima admissible (spreading) and does not change E_i x;
 *   - widening a block to swallow a gap before the next minimum only adds
 *     coordinates, which never lowers ‖E_i x‖ (projections are contractive).
 * Every block is then a contiguous window of support positions, so the norm
 * is a dynamic program over O(n²) windows. The reduction is validated against
 * the brute-force oracle in oracle.hpp, which enumerates arbitrary families.
 *
 * Well-foundedness. A single block covering the whole window contributes
 * θ‖x‖ < ‖x‖ and is skipped; every other block is a strictly smaller window.
 *
 * Search. For each window the admissible minima sets are enumerated depth
 * first. A prefix outside S_α cannot be extended by larger elements back
 * into S_α (hereditary), so such branches are cut.
 *
 * Memo tables and membership caches live inside one call; concurrent calls
 * share nothing.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tsirelson/context.hpp"
#include "tsirelson/error.hpp"
#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson {

inline constexpr std::size_t kMaxEngineSupport = 63;

// Consecutive blocks E_1 < ... < E_d whose minima form an S_α-set.
class AdmissiblePartition {
 public:
  static AdmissiblePartition make(std::vector<IndexSet> blocks, const Ordinal& alpha) {
    std::vector<Index> mins;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].empty()) throw Error(ErrorCode::kInvalidArgument, "partition blocks must be nonempty");
      if (i > 0 && blocks[i - 1].max() >= blocks[i].min())
        throw Error(ErrorCode::kInvalidArgument, "partition blocks must be consecutive");
      mins.push_back(blocks[i].min());
    }
    IndexSet minima(std::move(mins));
    if (!is_member(minima, alpha))
      throw Error(ErrorCode::kNotMember, "minima " + minima.to_string() + " not in S_" + alpha.to_string());
    return AdmissiblePartition(std::move(blocks), std::move(minima));
  }

  const std::vector<IndexSet>& blocks() const { return blocks_; }
  const IndexSet& minima() const { return minima_; }

  friend bool operator==(const AdmissiblePartition&, const AdmissiblePartition&) = default;

 private:
  AdmissiblePartition(std::vector<IndexSet> blocks, IndexSet minima)
      : blocks_(std::move(blocks)), minima_(std::move(minima)) {}

  std::vector<IndexSet> blocks_;
  IndexSet minima_;
};

// Certificate for a norm value: either a sup-norm leaf |a_i| or an
// admissible partition whose blocks carry their own certificates.
class NormWitness {
 public:
  static NormWitness sup_leaf(Index i) {
    NormWitness w;
    w.leaf_ = i;
    return w;
  }
  static NormWitness split(AdmissiblePartition partition, std::vector<NormWitness> children) {
    if (children.size() != partition.blocks().size())
      throw Error(ErrorCode::kInvalidArgument, "one child witness per block");
    NormWitness w;
    w.partition_ = std::move(partition);
    w.children_ = std::move(children);
    return w;
  }

  bool is_leaf() const { return leaf_.has_value(); }
  Index leaf_index() const { return *leaf_; }
  const AdmissiblePartition& partition() const { return *partition_; }
  const std::vector<NormWitness>& children() const { return children_; }

  // Value certified by this tree for x: |a_i| at a leaf, θ Σ children at a
  // split. Every leaf must lie inside the blocks enclosing it.
  Rational reconstruct(const SparseVector& x, const Rational& theta) const {
    return reconstruct_in(x, theta, nullptr);
  }

 private:
  Rational reconstruct_in(const SparseVector& x, const Rational& theta, const IndexSet* scope) const {
    if (is_leaf()) {
      if (scope && !scope->contains(*leaf_))
        throw Error(ErrorCode::kVerificationFailure, "witness leaf outside its block");
      return x[*leaf_].abs();
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      const IndexSet& block = partition_->blocks()[i];
      if (scope && !(block.intersect(*scope) == block))
        throw Error(ErrorCode::kVerificationFailure, "witness block escapes its parent");
      sum += children_[i].reconstruct_in(x, theta, &block);
    }
    return theta * sum;
  }

  std::optional<Index> leaf_;
  std::optional<AdmissiblePartition> partition_;
  std::vector<NormWitness> children_;
};

namespace detail {

// Window dynamic program over the support of one vector.
class NormEngine {
 public:
  NormEngine(const SparseVector& x, const NormContext& ctx) : ctx_(ctx) {
    if (x.support_size() > kMaxEngineSupport)
      throw Error(ErrorCode::kSupportTooLarge,
                  "support of " + std::to_string(x.support_size()) + " exceeds engine limit " +
                      std::to_string(kMaxEngineSupport));
    for (auto& [i, a] : x) {
      idx_.push_back(i);
      abs_.push_back(a.abs());
    }
    n_ = idx_.size();
    sup_.assign(n_ * n_, Rational(0));
    for (std::size_t a = 0; a < n_; ++a) {
      Rational m = 0;
      for (std::size_t b = a; b < n_; ++b) {
        m = std::max(m, abs_[b]);
        sup_[a * n_ + b] = m;
      }
    }
  }

  std::size_t size() const { return n_; }

  // Fills the implicit-norm table; with `track` the optimal choice per window
  // is kept for witness extraction.
  void solve(bool track) {
    value_.assign(n_ * n_, Rational(0));
    if (track) choice_.assign(n_ * n_, {});
    auto table = [this](std::size_t a, std::size_t b) -> const Rational& { return value_[a * n_ + b]; };
    for (std::size_t len = 1; len <= n_; ++len) {
      for (std::size_t a = 0; a + len <= n_; ++a) {
        const std::size_t b = a + len - 1;
        Rational v = sup_[a * n_ + b];
        Best best;
        if (len > 1) search(a, b, table, track, best);
        const bool split = best.found && ctx_.theta() * best.sum > v;
        if (split) v = ctx_.theta() * best.sum;
        value_[a * n_ + b] = v;
        if (track) {
          if (split) choice_[a * n_ + b] = std::move(best.minima);
          else choice_[a * n_ + b].clear();
        }
      }
    }
  }

  const Rational& value(std::size_t a, std::size_t b) const { return value_[a * n_ + b]; }

  NormWitness witness(std::size_t a, std::size_t b) const {
    const auto& minima = choice_[a * n_ + b];
    if (minima.empty()) {
      std::size_t arg = a;
      for (std::size_t p = a; p <= b; ++p)
        if (abs_[p] > abs_[arg]) arg = p;
      return NormWitness::sup_leaf(idx_[arg]);
    }
    std::vector<IndexSet> blocks;
    std::vector<NormWitness> children;
    for (std::size_t i = 0; i < minima.size(); ++i) {
      const std::size_t lo = minima[i];
      const std::size_t hi = i + 1 < minima.size() ? minima[i + 1] - 1 : b;
      blocks.emplace_back(std::vector<Index>(idx_.begin() + lo, idx_.begin() + hi + 1));
      children.push_back(witness(lo, hi));
    }
    return NormWitness::split(AdmissiblePartition::make(std::move(blocks), ctx_.alpha()), std::move(children));
  }

  // Top-level iterates ‖x‖_0, ..., ‖x‖_count.
  std::vector<Rational> iterates(std::size_t count) {
    std::vector<Rational> layer = sup_;
    std::vector<Rational> out{layer[n_ - 1]};
    bool stable = false;
    while (out.size() <= count) {
      if (stable) {
        out.push_back(out.back());
        continue;
      }
      std::vector<Rational> next(n_ * n_);
      auto table = [&layer, this](std::size_t a, std::size_t b) -> const Rational& { return layer[a * n_ + b]; };
      for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a; b < n_; ++b) {
          Rational v = layer[a * n_ + b];
          if (b > a) {
            Best best;
            search(a, b, table, false, best);
            if (best.found) v = std::max(v, ctx_.theta() * best.sum);
          }
          next[a * n_ + b] = v;
        }
      }
      stable = next == layer;
      layer = std::move(next);
      out.push_back(layer[n_ - 1]);
    }
    return out;
  }

 private:
  struct Best {
    bool found = false;
    Rational sum;
    std::vector<std::size_t> minima;
  };

  bool admissible(std::uint64_t mask) {
    const int count = std::popcount(mask);
    const Index first = idx_[std::countr_zero(mask)];
    const Ordinal& alpha = ctx_.alpha();
    if (alpha.is_zero()) return count == 1;
    if (count <= first) return true;
    if (alpha == Ordinal::finite(1)) return false;
    auto it = admissible_cache_.find(mask);
    if (it != admissible_cache_.end()) return it->second;
    std::vector<Index> elems;
    for (std::uint64_t m = mask; m; m &= m - 1) elems.push_back(idx_[std::countr_zero(m)]);
    const bool ok = is_member(elems, alpha);
    admissible_cache_.emplace(mask, ok);
    return ok;
  }

  // Best Σ table(block) over admissible minima sets in window [a, b],
  // excluding the single block equal to the whole window.
  template <class Table>
  void search(std::size_t a, std::size_t b, const Table& table, bool track, Best& best) {
    std::vector<std::size_t> minima;
    auto consider = [&](const Rational& total) {
      if (!best.found || total > best.sum) {
        best.found = true;
        best.sum = total;
        if (track) best.minima = minima;
      } else if (track && total == best.sum) {
        if (minima.size() < best.minima.size() ||
            (minima.size() == best.minima.size() && minima < best.minima))
          best.minima = minima;
      }
    };
    auto rec = [&](auto& self, std::size_t last, std::uint64_t mask, const Rational& partial) -> void {
      if (!(minima.size() == 1 && last == a)) consider(partial + table(last, b));
      for (std::size_t p = last + 1; p <= b; ++p) {
        const std::uint64_t next = mask | (std::uint64_t{1} << p);
        if (!admissible(next)) continue;
        minima.push_back(p);
        self(self, p, next, partial + table(last, p - 1));
        minima.pop_back();
      }
    };
    for (std::size_t p = a; p <= b; ++p) {
      minima.assign(1, p);
      rec(rec, p, std::uint64_t{1} << p, Rational(0));
    }
  }

  NormContext ctx_;
  std::vector<Index> idx_;
  std::vector<Rational> abs_;
  std::size_t n_ = 0;
  std::vector<Rational> sup_;
  std::vector<Rational> value_;
  std::vector<std::vector<std::size_t>> choice_;
  std::unordered_map<std::uint64_t, bool> admissible_cache_;
};

}  // namespace detail

inline Rational tsirelson_norm(const SparseVector& x, const NormContext& ctx) {
  if (x.is_zero()) return 0;
  if (x.support_size() == 1) return x.begin()->second.abs();
  detail::NormEngine engine(x, ctx);
  engine.solve(false);
  return engine.value(0, engine.size() - 1);
}

struct NormResult {
  Rational value;
  NormWitness witness;
};

// Norm plus a certificate. Among optimal certificates a sup leaf wins, then
// the partition with fewest blocks, then lexicographically smallest minima.
inline NormResult norm_with_witness(const SparseVector& x, const NormContext& ctx) {
  if (x.is_zero()) throw Error(ErrorCode::kZeroVector, "the zero vector has no norm witness");
  detail::NormEngine engine(x, ctx);
  engine.solve(true);
  const std::size_t last = engine.size() - 1;
  return {engine.value(0, last), engine.witness(0, last)};
}

// ‖x‖_0, ..., ‖x‖_count where ‖·‖_0 is the sup norm and
// ‖x‖_{k+1} = max{‖x‖_k, sup θ Σ ‖E_i x‖_k}.
inline std::vector<Rational> norm_iterates(const SparseVector& x, const NormContext& ctx, std::size_t count) {
  if (x.is_zero()) return std::vector<Rational>(count + 1, Rational(0));
  detail::NormEngine engine(x, ctx);
  return engine.iterates(count);
}

inline Rational norm_iterate(const SparseVector& x, const NormContext& ctx, std::size_t n) {
  return norm_iterates(x, ctx, n).back();
}

// Smallest n with ‖x‖_n equal to the implicit norm. Each layer resolves one
// more level of nesting, so n never exceeds the support size.
inline std::size_t stabilization_index(const SparseVector& x, const NormContext& ctx) {
  const Rational target = tsirelson_norm(x, ctx);
  const auto seq = norm_iterates(x, ctx, x.support_size());
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (seq[k] == target) return k;
  throw Error(ErrorCode::kVerificationFailure, "iterates of " + format_vector(x) + " never reached " + target.to_string());
}

inline SparseVector normalize_to_sphere(const SparseVector& x, const NormContext& ctx) {
  if (x.is_zero()) throw Error(ErrorCode::kZeroVector, "cannot normalize the zero vector");
  return x / tsirelson_norm(x, ctx);
}

}  // namespace tsirelson
