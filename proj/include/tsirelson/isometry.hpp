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

// Coordinate maps U e_i = ε_i e_{π(i)}, exact isometry checks on a corpus,
// and executable versions of the witness vectors used to show which such
// maps are (or are not) isometries of T[θ, S_α].
//
// Conventions: sgn(0) = +1. "Checked" always means recomputed by the norm
// engine; a closed form that disagrees with the engine raises
// kVerificationFailure instead of being reported as data.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsirelson/context.hpp"
#include "tsirelson/error.hpp"
#include "tsirelson/norm.hpp"
#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"

namespace tsirelson {

// A bijection π of {1..p} (identity beyond p) together with signs ε.
class CoordinateMap {
 public:
  CoordinateMap() = default;
  CoordinateMap(std::vector<Index> perm, SignPattern signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
    std::vector<bool> seen(perm_.size() + 1, false);
    for (Index v : perm_) {
      if (v < 1 || v > static_cast<Index>(perm_.size()) || seen[v])
        throw Error(ErrorCode::kMalformedMap, "perm must be a bijection of {1.." + std::to_string(perm_.size()) + "}");
      seen[v] = true;
    }
    // Trailing fixed points carry no information; dropping them makes
    // equal maps compare equal.
    while (!perm_.empty() && perm_.back() == static_cast<Index>(perm_.size())) perm_.pop_back();
  }

  static CoordinateMap identity() { return {}; }
  static CoordinateMap signs_only(SignPattern s) { return CoordinateMap({}, std::move(s)); }
  static CoordinateMap swap(Index i, Index j, SignPattern s = SignPattern()) {
    if (i < 1 || j < 1) throw Error(ErrorCode::kMalformedIndex, "swap indices must be positive");
    std::vector<Index> perm(static_cast<std::size_t>(std::max(i, j)));
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<Index>(k + 1);
    std::swap(perm[i - 1], perm[j - 1]);
    return CoordinateMap(std::move(perm), std::move(s));
  }

  Index image(Index i) const { return i <= prefix() ? perm_[i - 1] : i; }
  int sign(Index i) const { return signs_(i); }
  Index prefix() const { return static_cast<Index>(perm_.size()); }
  const std::vector<Index>& perm() const { return perm_; }
  const SignPattern& signs() const { return signs_; }

  bool is_identity_permutation() const { return perm_.empty(); }
  // Largest index with π(i) ≠ i, or 0.
  Index largest_moved() const {
    for (Index i = prefix(); i >= 1; --i)
      if (perm_[i - 1] != i) return i;
    return 0;
  }

  // U⁻¹ e_{π(i)} = ε_i e_i.
  CoordinateMap inverse() const {
    std::vector<Index> inv(perm_.size());
    for (std::size_t k = 0; k < perm_.size(); ++k) inv[perm_[k] - 1] = static_cast<Index>(k + 1);
    std::map<Index, int> table;
    for (auto& [i, s] : signs_.table()) table[image(i)] = s;
    for (Index i = 1; i <= prefix(); ++i) table[image(i)] = sign(i);
    return CoordinateMap(std::move(inv), SignPattern(std::move(table), signs_.fallback()));
  }

  // perm=2,1;signs=-1,1;default=+1 — every clause optional.
  static CoordinateMap parse(std::string_view text) {
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedMap, "cannot parse map '" + std::string(text) + "': " + why);
    };
    std::vector<Index> perm;
    std::map<Index, int> table;
    int fallback = 1;
    std::set<std::string> keys;
    auto parse_sign = [&](std::string_view s) {
      s = detail::trim(s);
      if (s == "1" || s == "+1") return 1;
      if (s == "-1") return -1;
      throw fail("sign must be +1 or -1");
    };
    const auto body = detail::trim(text);
    if (body.empty() || body == "identity") return identity();
    for (auto clause : detail::split(body, ';')) {
      clause = detail::trim(clause);
      if (clause.empty()) continue;
      const auto eq = clause.find('=');
      if (eq == std::string_view::npos) throw fail("clause without '='");
      const std::string key(detail::trim(clause.substr(0, eq)));
      const auto value = detail::trim(clause.substr(eq + 1));
      if (!keys.insert(key).second) throw fail("duplicate clause " + key);
      if (key == "perm") {
        if (value.empty()) continue;
        for (auto part : detail::split(value, ',')) perm.push_back(detail::parse_index(part));
      } else if (key == "signs") {
        if (value.empty()) continue;
        Index i = 1;
        for (auto part : detail::split(value, ',')) table[i++] = parse_sign(part);
      } else if (key == "default") {
        fallback = parse_sign(value);
      } else {
        throw fail("unknown clause " + key);
      }
    }
    return CoordinateMap(std::move(perm), SignPattern(std::move(table), fallback));
  }

  std::string to_string() const {
    std::string out = "perm=";
    for (std::size_t k = 0; k < perm_.size(); ++k) out += (k ? "," : "") + std::to_string(perm_[k]);
    out += ";signs=";
    const Index last = signs_.table().empty() ? 0 : signs_.table().rbegin()->first;
    for (Index i = 1; i <= last; ++i) out += std::string(i > 1 ? "," : "") + (sign(i) < 0 ? "-1" : "1");
    out += std::string(";default=") + (signs_.fallback() < 0 ? "-1" : "+1");
    return out;
  }

  friend bool operator==(const CoordinateMap& a, const CoordinateMap& b) {
    if (a.perm_ != b.perm_ || a.signs_.fallback() != b.signs_.fallback()) return false;
    for (auto& [i, s] : a.signs_.table())
      if (b.sign(i) != s) return false;
    for (auto& [i, s] : b.signs_.table())
      if (a.sign(i) != s) return false;
    return true;
  }

 private:
  std::vector<Index> perm_;
  SignPattern signs_;
};

inline SparseVector apply_map(const CoordinateMap& m, const SparseVector& x) {
  std::vector<SparseVector::Entry> out;
  out.reserve(x.support_size());
  for (auto& [i, a] : x) out.emplace_back(m.image(i), m.sign(i) < 0 ? -a : a);
  std::sort(out.begin(), out.end(), [](auto& l, auto& r) { return l.first < r.first; });
  return SparseVector(std::move(out));
}

// The α = 1 form: π permutes {1..⌊θ⁻¹⌋} and fixes everything else.
inline bool validate_theorem_a(const CoordinateMap& m, const NormContext& ctx) {
  return m.largest_moved() <= ctx.floor_inv_theta();
}

// Conforming maps for the context: the α = 1 form above, or sign changes
// only when α > 1.
inline bool conforms(const CoordinateMap& m, const NormContext& ctx) {
  if (ctx.alpha() == Ordinal::finite(1)) return validate_theorem_a(m, ctx);
  return m.is_identity_permutation();
}

struct Counterexample {
  SparseVector x;
  SparseVector y;
  Rational lhs;  // ‖Ux − Uy‖
  Rational rhs;  // ‖x − y‖
};

struct CheckReport {
  enum class Status { kPass, kFail };
  Status status = Status::kPass;
  std::optional<Counterexample> counterexample;
  std::size_t pairs_checked = 0;

  bool passed() const { return status == Status::kPass; }
};

inline const char* to_string(CheckReport::Status s) { return s == CheckReport::Status::kPass ? "pass" : "fail"; }

// Exact ‖Ux − Uy‖ = ‖x − y‖ over the corpus. Pair order is (x_i, 0) followed
// by (x_i, x_j) for j > i; the first mismatch in that order is reported.
inline CheckReport check_isometry(const CoordinateMap& m, const std::vector<SparseVector>& corpus,
                                  const NormContext& ctx) {
  CheckReport report;
  const SparseVector zero;
  std::vector<SparseVector> images;
  images.reserve(corpus.size());
  for (auto& x : corpus) images.push_back(apply_map(m, x));
  auto check = [&](std::size_t i, const SparseVector& y, const SparseVector& uy) {
    ++report.pairs_checked;
    const Rational lhs = tsirelson_norm(images[i] - uy, ctx);
    const Rational rhs = tsirelson_norm(corpus[i] - y, ctx);
    if (lhs == rhs) return true;
    report.status = CheckReport::Status::kFail;
    report.counterexample = Counterexample{corpus[i], y, lhs, rhs};
    return false;
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!check(i, zero, zero)) return report;
    for (std::size_t j = i + 1; j < corpus.size(); ++j)
      if (!check(i, corpus[j], images[j])) return report;
  }
  return report;
}

struct CeilingCounterexample {
  SparseVector u;  // e_c − Σ_{k<c} e_{c+k}, c = ⌈θ⁻¹⌉
  SparseVector v;  // e_1 − Σ_{k<c} e_{c+k}
  Rational expected_bad;   // θ·c > 1
  Rational expected_good;  // 1
};

// Witness that no isometry can send some e_i, i < ⌈θ⁻¹⌉, to ±e_{⌈θ⁻¹⌉}
// when θ⁻¹ is not an integer.
inline CeilingCounterexample ceiling_counterexample(const NormContext& ctx) {
  if (ctx.inverse_theta_is_integer())
    throw Error(ErrorCode::kIntegerTheta, "1/theta = " + ctx.inverse_theta().to_string() + " is an integer");
  const Index c = ctx.ceil_inv_theta();
  std::vector<SparseVector::Entry> tail;
  for (Index k = 1; k <= c - 1; ++k) tail.emplace_back(c + k, Rational(-1));
  const SparseVector rest(std::move(tail));
  CeilingCounterexample out{SparseVector::basis(c) + rest, SparseVector::basis(1) + rest, ctx.theta() * Rational(c),
                            Rational(1)};
  const Rational bad = tsirelson_norm(out.u, ctx);
  const Rational good = tsirelson_norm(out.v, ctx);
  if (bad != out.expected_bad || good != out.expected_good)
    throw Error(ErrorCode::kVerificationFailure, "ceiling counterexample: engine gives " + bad.to_string() + " and " +
                                                     good.to_string() + ", expected " +
                                                     out.expected_bad.to_string() + " and 1");
  return out;
}

namespace detail {

inline void require_sphere(const SparseVector& x, const NormContext& ctx) {
  if (x.is_zero() || tsirelson_norm(x, ctx) != Rational(1))
    throw Error(ErrorCode::kNotOnSphere, format_vector(x) + " is not on the unit sphere");
}

}  // namespace detail

// ‖x + e_n‖ = 2 ⇔ x(n) = 1 on one instance; true when both sides agree.
inline bool lemma4_verify(const SparseVector& x, Index n, const NormContext& ctx) {
  if (n < 1) throw Error(ErrorCode::kMalformedIndex, "n must be positive");
  detail::require_sphere(x, ctx);
  const bool norm_two = tsirelson_norm(x + SparseVector::basis(n), ctx) == Rational(2);
  return norm_two == (x[n] == Rational(1));
}

struct Lemma8Result {
  SparseVector x;  // Σ_{i≠j} θ b_i e_i + sign·e_j
  SparseVector z;  // y − Σ_{i≠j} θ b_i e_i + sgn(b_j) e_j
  Rational nx;     // 1
  Rational nz;     // 1 + |b_j|
};

/*
 * For y = Σ b_i e_i on the sphere. The j-th coordinate of z is
 * b_j + sgn(b_j), of modulus 1 + |b_j|, and that modulus is the norm; for
 * y = e_j this gives z = 2e_j.
 */
inline Lemma8Result lemma8_construct(const SparseVector& y, Index j, int sign, const NormContext& ctx) {
  if (j < 1) throw Error(ErrorCode::kMalformedIndex, "j must be positive");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::kInvalidArgument, "sign must be -1 or +1");
  detail::require_sphere(y, ctx);
  std::vector<SparseVector::Entry> off;
  for (auto& [i, b] : y)
    if (i != j) off.emplace_back(i, ctx.theta() * b);
  const SparseVector scaled(std::move(off));
  const Rational bj = y[j];
  const int sgn = bj.sign() < 0 ? -1 : 1;

  Lemma8Result out{scaled + SparseVector::basis(j, Rational(sign)),
                   y - scaled + SparseVector::basis(j, Rational(sgn)), 0, 0};
  out.nx = tsirelson_norm(out.x, ctx);
  out.nz = tsirelson_norm(out.z, ctx);
  if (out.nx != Rational(1) || out.nz != Rational(1) + bj.abs())
    throw Error(ErrorCode::kVerificationFailure, "distance construction at j=" + std::to_string(j) + " for " + format_vector(y) +
                                                     ": got " + out.nx.to_string() + ", " + out.nz.to_string());
  return out;
}

// x_k = k⁻¹θ⁻¹ (e_k + ... + e_{2k−1}), a sphere vector once k > θ⁻¹.
inline SparseVector xk_vector(Index k, const NormContext& ctx) {
  if (ctx.alpha() != Ordinal::finite(1)) throw Error(ErrorCode::kInvalidArgument, "x_k is defined for alpha = 1");
  if (Rational(k) <= ctx.inverse_theta())
    throw Error(ErrorCode::kInvalidArgument, "x_k needs k > 1/theta, got k = " + std::to_string(k));
  const Rational c = Rational(1, k) * ctx.inverse_theta();
  SparseVector x = SparseVector::constant_on(IndexSet::interval(k, 2 * k - 1), c);
  if (tsirelson_norm(x, ctx) != Rational(1))
    throw Error(ErrorCode::kVerificationFailure, "x_" + std::to_string(k) + " is not on the sphere");
  return x;
}

struct XkCheck {
  std::optional<Rational> plus;   // ‖x_k + e_i‖ when θ⁻¹ < k ≤ 2θ⁻¹
  std::optional<Rational> minus;  // ‖x_k − e_i‖ when k > 2θ⁻¹
  Rational expected;
};

inline XkCheck xk_norm_checks(Index k, Index i, const NormContext& ctx) {
  const SparseVector x = xk_vector(k, ctx);
  if (i < k || i > 2 * k - 1) throw Error(ErrorCode::kInvalidArgument, "i must lie in supp x_k");
  const Rational inv = ctx.inverse_theta();
  XkCheck out;
  if (Rational(k) <= Rational(2) * inv) {
    out.expected = Rational(1) + Rational(1, k) * inv;
    out.plus = tsirelson_norm(x + SparseVector::basis(i), ctx);
    if (*out.plus != out.expected)
      throw Error(ErrorCode::kVerificationFailure, "||x_k + e_i|| = " + out.plus->to_string());
  } else {
    out.expected = Rational(1) - Rational(2, k) + ctx.theta();
    out.minus = tsirelson_norm(x - SparseVector::basis(i), ctx);
    if (*out.minus != out.expected)
      throw Error(ErrorCode::kVerificationFailure, "||x_k - e_i|| = " + out.minus->to_string());
  }
  return out;
}

// A permutation σ of a finite set, identity elsewhere.
class FinitePermutation {
 public:
  FinitePermutation() = default;
  explicit FinitePermutation(std::map<Index, Index> table) : table_(std::move(table)) {
    std::set<Index> values;
    for (auto& [i, v] : table_) {
      if (i < 1 || v < 1) throw Error(ErrorCode::kMalformedIndex, "sigma entries must be positive");
      if (!values.insert(v).second) throw Error(ErrorCode::kNonInjective, "sigma is not injective");
    }
    for (Index v : values)
      if (!table_.count(v)) throw Error(ErrorCode::kNonInjective, "sigma must permute its own domain");
  }

  Index operator()(Index i) const {
    auto it = table_.find(i);
    return it == table_.end() ? i : it->second;
  }
  const std::map<Index, Index>& table() const { return table_; }

  std::string to_string() const {
    std::string out;
    for (auto& [i, v] : table_) {
      if (i == v) continue;
      out += (out.empty() ? "" : ",") + std::to_string(i) + ">" + std::to_string(v);
    }
    return out.empty() ? "id" : out;
  }

 private:
  std::map<Index, Index> table_;
};

struct Case2Result {
  std::vector<IndexSet> blocks;  // {k} followed by t maximal S_β-sets
  Ordinal block_order;           // β
  bool union_member = false;     // expected true
  bool image_member = false;     // expected false
};

/*
 * With t = σ(k) < k: S⁰ = {k}, then t maximal S_β-sets, each index chosen
 * greedily to exceed max{previous, σ(previous)}. The union has t + 1 blocks
 * and minimum k, so it lies in S_α; its σ-image has minimum t < t + 1 and
 * must fall out. β is α − 1 for successor α and t − 1 for α = ω.
 *
 * Maximal S_β-sets grow like towers of exponentials in β (from m, an
 * S_2-set already has m(2^m − 1) elements), so `cap` bounds the total
 * number of elements and kResourceLimit is raised beyond it.
 */
inline Case2Result case2_construction(Index k, const FinitePermutation& sigma, const Ordinal& alpha,
                                      const NormContext& ctx, std::size_t cap = kDefaultMaximalSetCap) {
  if (k < 1) throw Error(ErrorCode::kMalformedIndex, "k must be positive");
  const Index t = sigma(k);
  if (t >= k) throw Error(ErrorCode::kInvalidArgument, "need sigma(k) < k");
  if (alpha <= Ordinal::finite(1)) throw Error(ErrorCode::kInvalidArgument, "need alpha > 1");
  if (!alpha.is_successor() && !alpha.is_limit())
    throw Error(ErrorCode::kInvalidArgument, "alpha must be a successor or w");
  const Ordinal beta = alpha.is_limit() ? Ordinal::finite(t - 1) : alpha.predecessor();

  Case2Result out;
  out.block_order = beta;
  out.blocks.push_back(IndexSet{k});
  std::vector<Index> all{k};
  auto next_after = [&](Index p) { return std::max(p, sigma(p)) + 1; };
  Index cursor = std::max<Index>(next_after(k), ctx.floor_inv_theta() + 1);

  for (Index n = 0; n < t; ++n) {
    if (all.size() >= cap)
      throw Error(ErrorCode::kResourceLimit, "block construction exceeds " + std::to_string(cap) + " elements");
    std::vector<Index> block = beta.is_zero()
                                   ? std::vector<Index>{cursor}
                                   : longest_member_chain(cursor, next_after, beta, cap - all.size(),
                                                          "block construction");
    all.insert(all.end(), block.begin(), block.end());
    cursor = next_after(block.back());
    out.blocks.emplace_back(std::move(block));
  }

  out.union_member = is_member(all, alpha);
  std::vector<Index> image;
  image.reserve(all.size());
  for (Index i : all) image.push_back(sigma(i));
  std::sort(image.begin(), image.end());
  out.image_member = is_member(image, alpha);
  return out;
}

struct Lemma3Witness {
  SparseVector y;
  Rational value;  // min(‖u + y‖, ‖u − y‖) > 1
};

/*
 * Probes y = e_{j_1} + ... + e_{j_m}, m = ⌊θ⁻¹⌋, consecutive indices with
 * supp u < j_1 (and j_1 > ⌊θ⁻¹⌋ when α > 1), shifted right by 0..budget.
 * Returns the first y with min(‖u + y‖, ‖u − y‖) > 1. No witness is not a
 * proof that u has the special form.
 */
inline std::optional<Lemma3Witness> lemma3_probe(const SparseVector& u, const NormContext& ctx, int budget) {
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "budget must be nonnegative");
  detail::require_sphere(u, ctx);
  const Index m = ctx.floor_inv_theta();
  Index first = u.max_index() + 1;
  if (ctx.alpha() > Ordinal::finite(1)) first = std::max(first, m + 1);
  for (int shift = 0; shift <= budget; ++shift) {
    const SparseVector y =
        normalize_to_sphere(SparseVector::constant_on(IndexSet::interval(first + shift, first + shift + m - 1), 1), ctx);
    const Rational value = std::min(tsirelson_norm(u + y, ctx), tsirelson_norm(u - y, ctx));
    if (value > Rational(1)) return Lemma3Witness{y, value};
  }
  return std::nullopt;
}

// U(−e_i) = −U(e_i) for every i up to the map's prefix, sign table, plus a margin.
inline bool oddness_check(const CoordinateMap& m) {
  Index last = m.prefix();
  if (!m.signs().table().empty()) last = std::max(last, m.signs().table().rbegin()->first);
  for (Index i = 1; i <= last + 2; ++i) {
    const SparseVector e = SparseVector::basis(i);
    if (apply_map(m, -e) != -apply_map(m, e)) return false;
  }
  return true;
}

inline const std::vector<Rational>& homogeneity_scalings() {
  static const std::vector<Rational> s{Rational(2), Rational(1, 3), Rational(-3, 2)};
  return s;
}

// The sphere map restricted from m extends to the linear map m itself:
// corpus isometry plus ‖U(cx)‖ = ‖cx‖ for a few off-sphere scalings.
inline CheckReport tingley_extend(const CoordinateMap& m, const NormContext& ctx,
                                  const std::vector<SparseVector>& corpus) {
  if (!conforms(m, ctx))
    throw Error(ErrorCode::kFormValidation, m.to_string() + " is not of the admissible form for " + ctx.to_string());
  CheckReport report = check_isometry(m, corpus, ctx);
  if (!report.passed()) return report;
  const SparseVector zero;
  for (auto& x : corpus) {
    for (auto& c : homogeneity_scalings()) {
      const SparseVector cx = x * c;
      ++report.pairs_checked;
      const Rational lhs = tsirelson_norm(apply_map(m, cx), ctx);
      const Rational rhs = tsirelson_norm(cx, ctx);
      if (lhs != rhs) {
        report.status = CheckReport::Status::kFail;
        report.counterexample = Counterexample{cx, zero, lhs, rhs};
        return report;
      }
    }
  }
  return report;
}

}  // namespace tsirelson
