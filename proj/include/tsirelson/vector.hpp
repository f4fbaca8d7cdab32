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

// Finitely supported vectors of c_00 over exact rationals, finite index
// sets and sign patterns. Indices are 1-based: e_1 is the first basis vector.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsirelson/error.hpp"
#include "tsirelson/rational.hpp"

namespace tsirelson {

using Index = std::int64_t;

namespace detail {

inline Index parse_index(std::string_view text) {
  Index v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v <= 0)
    throw Error(ErrorCode::kMalformedIndex, "bad index '" + std::string(text) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// A finite, strictly increasing set of positive integers.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<Index> elems) : IndexSet(std::vector<Index>(elems)) {}
  explicit IndexSet(std::vector<Index> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] <= 0)
        throw Error(ErrorCode::kMalformedIndex, "indices must be positive");
      if (i > 0 && elems_[i] <= elems_[i - 1])
        throw Error(ErrorCode::kMalformedIndex, "indices must be strictly increasing");
    }
  }

  // Consecutive integers lo..hi (empty when hi < lo).
  static IndexSet interval(Index lo, Index hi) {
    std::vector<Index> v;
    for (Index i = lo; i <= hi; ++i) v.push_back(i);
    return IndexSet(std::move(v));
  }

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  Index min() const { return elems_.front(); }
  Index max() const { return elems_.back(); }
  bool contains(Index i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }
  const std::vector<Index>& elements() const { return elems_; }
  std::span<const Index> span() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  IndexSet intersect(const IndexSet& other) const {
    std::vector<Index> out;
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                          other.elems_.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
  }

  // Returns a copy with i appended; i must exceed max().
  IndexSet with(Index i) const {
    auto v = elems_;
    v.push_back(i);
    return IndexSet(std::move(v));
  }

  // Comma-separated increasing integers, e.g. "2,4,5". Empty text is ∅.
  static IndexSet parse(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) return {};
    std::vector<Index> v;
    for (auto part : detail::split(text, ',')) v.push_back(detail::parse_index(detail::trim(part)));
    return IndexSet(std::move(v));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(elems_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.elems_ <=> b.elems_; }

 private:
  std::vector<Index> elems_;
};

inline std::ostream& operator<<(std::ostream& os, const IndexSet& s) { return os << s.to_string(); }

// Total sign function on the positive integers: explicit table entries,
// `fallback` everywhere else. Values are always -1 or +1.
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(int fallback) : fallback_(check(fallback)) {}
  SignPattern(std::map<Index, int> table, int fallback) : table_(std::move(table)), fallback_(check(fallback)) {
    for (auto& [i, s] : table_) {
      if (i <= 0) throw Error(ErrorCode::kMalformedIndex, "sign table index must be positive");
      check(s);
    }
  }

  static SignPattern all(int s) { return SignPattern(s); }

  int operator()(Index i) const {
    auto it = table_.find(i);
    return it == table_.end() ? fallback_ : it->second;
  }
  const std::map<Index, int>& table() const { return table_; }
  int fallback() const { return fallback_; }

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  static int check(int s) {
    if (s != 1 && s != -1) throw Error(ErrorCode::kInvalidArgument, "sign must be -1 or +1");
    return s;
  }

  std::map<Index, int> table_;
  int fallback_ = 1;
};

// x = Σ a_i e_i with finitely many nonzero a_i, stored as (index, coefficient)
// pairs in increasing index order without explicit zeros.
class SparseVector {
 public:
  using Entry = std::pair<Index, Rational>;

  SparseVector() = default;
  SparseVector(std::initializer_list<Entry> entries) : SparseVector(std::vector<Entry>(entries)) {}
  explicit SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k].first <= 0) throw Error(ErrorCode::kMalformedIndex, "indices must be positive");
      if (k > 0 && entries_[k].first <= entries_[k - 1].first)
        throw Error(ErrorCode::kMalformedIndex, "indices must be strictly increasing");
      if (entries_[k].second.is_zero())
        throw Error(ErrorCode::kZeroCoefficient, "explicit zero at index " + std::to_string(entries_[k].first));
    }
  }

  // The basis vector c·e_i.
  static SparseVector basis(Index i, Rational c = 1) {
    if (c.is_zero()) return {};
    return SparseVector({{i, c}});
  }

  // c · Σ_{i ∈ s} e_i.
  static SparseVector constant_on(const IndexSet& s, Rational c) {
    std::vector<Entry> e;
    if (!c.is_zero())
      for (Index i : s) e.emplace_back(i, c);
    return SparseVector(std::move(e));
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  IndexSet support() const {
    std::vector<Index> s;
    s.reserve(entries_.size());
    for (auto& [i, a] : entries_) s.push_back(i);
    return IndexSet(std::move(s));
  }
  Index max_index() const { return entries_.empty() ? 0 : entries_.back().first; }
  Index min_index() const { return entries_.empty() ? 0 : entries_.front().first; }

  // x(i); zero off the support.
  Rational operator[](Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index k) { return e.first < k; });
    return (it != entries_.end() && it->first == i) ? it->second : Rational(0);
  }

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b) {
    return merge(a, b, 1);
  }
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b) {
    return merge(a, b, -1);
  }
  SparseVector operator-() const { return *this * Rational(-1); }
  friend SparseVector operator*(const SparseVector& x, const Rational& c) {
    if (c.is_zero()) return {};
    SparseVector r;
    r.entries_.reserve(x.entries_.size());
    for (auto& [i, a] : x.entries_) r.entries_.emplace_back(i, a * c);
    return r;
  }
  friend SparseVector operator*(const Rational& c, const SparseVector& x) { return x * c; }
  friend SparseVector operator/(const SparseVector& x, const Rational& c) { return x * c.inverse(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
  friend bool operator<(const SparseVector& a, const SparseVector& b) { return a.entries_ < b.entries_; }

 private:
  static SparseVector merge(const SparseVector& a, const SparseVector& b, int sign) {
    SparseVector r;
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
        r.entries_.push_back(a.entries_[i++]);
      } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
        const auto& [k, c] = b.entries_[j++];
        r.entries_.emplace_back(k, sign > 0 ? c : -c);
      } else {
        Rational c = sign > 0 ? a.entries_[i].second + b.entries_[j].second
                              : a.entries_[i].second - b.entries_[j].second;
        if (!c.is_zero()) r.entries_.emplace_back(a.entries_[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Entry> entries_;
};

// E x: keeps exactly the coefficients at indices in E.
inline SparseVector project(const SparseVector& x, const IndexSet& e) {
  std::vector<SparseVector::Entry> out;
  for (auto& entry : x)
    if (e.contains(entry.first)) out.push_back(entry);
  return SparseVector(std::move(out));
}

inline Rational sup_norm(const SparseVector& x) {
  Rational m = 0;
  for (auto& [i, a] : x) m = std::max(m, a.abs());
  return m;
}

inline Rational ell1_norm(const SparseVector& x) {
  Rational s = 0;
  for (auto& [i, a] : x) s += a.abs();
  return s;
}

inline SparseVector flip_signs(const SparseVector& x, const SignPattern& s) {
  std::vector<SparseVector::Entry> out;
  out.reserve(x.support_size());
  for (auto& [i, a] : x) out.emplace_back(i, s(i) < 0 ? -a : a);
  return SparseVector(std::move(out));
}

// Moves a_i to f(i). f must cover the support, be strictly increasing there
// and never move an index to the left.
inline SparseVector spread(const SparseVector& x, const std::map<Index, Index>& f) {
  std::vector<SparseVector::Entry> out;
  out.reserve(x.support_size());
  for (auto& [i, a] : x) {
    auto it = f.find(i);
    if (it == f.end())
      throw Error(ErrorCode::kInvalidArgument, "spread map undefined at " + std::to_string(i));
    if (it->second < i)
      throw Error(ErrorCode::kInvalidArgument, "spread map moves index left");
    if (!out.empty() && it->second <= out.back().first)
      throw Error(ErrorCode::kInvalidArgument, "spread map not strictly increasing");
    out.emplace_back(it->second, a);
  }
  return SparseVector(std::move(out));
}

// Text form "i:p/q,j:r" with strictly increasing positive indices. The zero
// vector formats as the empty string.
inline SparseVector parse_vector(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) return {};
  std::vector<SparseVector::Entry> out;
  for (auto part : detail::split(text, ',')) {
    part = detail::trim(part);
    const auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::kMalformedIndex, "expected index:rational, got '" + std::string(part) + "'");
    const Index i = detail::parse_index(detail::trim(part.substr(0, colon)));
    const Rational a = Rational::parse(detail::trim(part.substr(colon + 1)));
    out.emplace_back(i, a);
  }
  return SparseVector(std::move(out));
}

inline std::string format_vector(const SparseVector& x) {
  std::string s;
  for (auto& [i, a] : x) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
    s += ':';
    s += a.to_string();
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const SparseVector& x) {
  return os << '[' << format_vector(x) << ']';
}

}  // namespace tsirelson
