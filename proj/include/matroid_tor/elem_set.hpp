// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_TOR_ELEM_SET_HPP
#define MATROID_TOR_ELEM_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace matroid_tor {

/// Largest supported ground set. Elements are 1-indexed, element e lives in
/// bit e-1 of a 32-bit word.
inline constexpr int kMaxGroundSet = 31;

/// Subset of {1,...,31} with constant-time set algebra.
///
/// Iteration (`elements()`, `for_each`) is always in increasing element
/// order. The default `operator<=>` compares raw bit patterns, which is a
/// total order but NOT the lexicographic order on sorted element lists; use
/// `lex_less` for the latter.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint32_t bits) : bits_(bits) {}
  ElemSet(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }
  explicit ElemSet(const std::vector<int>& elems) {
    for (int e : elems) insert(e);
  }

  static constexpr ElemSet singleton(int e) { return ElemSet(1u << (e - 1)); }
  /// {1,...,n}
  static constexpr ElemSet full(int n) {
    return ElemSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1u; }
  constexpr bool subset_of(ElemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElemSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  void insert(int e) { bits_ |= 1u << (e - 1); }
  void erase(int e) { bits_ &= ~(1u << (e - 1)); }

  constexpr ElemSet with(int e) const { return ElemSet(bits_ | (1u << (e - 1))); }
  constexpr ElemSet without(int e) const {
    return ElemSet(bits_ & ~(1u << (e - 1)));
  }

  /// Smallest / largest element; 0 for the empty set.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  /// Number of members strictly smaller than e.
  constexpr int rank_of(int e) const {
    return std::popcount(bits_ & ((1u << (e - 1)) - 1u));
  }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElemSet, ElemSet) = default;
  friend constexpr auto operator<=>(ElemSet, ElemSet) = default;

  /// "125", or "{1,2,10}" once an element needs two digits.
  std::string to_string() const {
    const auto elems = elements();
    bool compact = max() < 10;
    std::string out = compact ? "" : "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(elems[i]);
    }
    if (!compact) out += '}';
    if (compact && out.empty()) out = "{}";
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the increasing element lists.
inline bool lex_less(ElemSet a, ElemSet b) {
  std::uint32_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

/// Calls f on every subset of `ground` with exactly k members, in increasing
/// order of bit pattern (colex).
template <typename F>
void for_each_subset_of_size(ElemSet ground, int k, F&& f) {
  const auto elems = ground.elements();
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(ElemSet{});
    return;
  }
  std::uint64_t idx = (1ull << k) - 1u;
  const std::uint64_t limit = 1ull << m;
  while (idx < limit) {
    ElemSet s;
    for (std::uint64_t b = idx; b != 0; b &= b - 1) s.insert(elems[std::countr_zero(b)]);
    f(s);
    std::uint64_t c = idx & (~idx + 1u);
    std::uint64_t r = idx + c;
    idx = (((r ^ idx) >> 2) / c) | r;
  }
}

/// Calls f on every subset of `ground`, in increasing bit-pattern order.
template <typename F>
void for_each_subset(ElemSet ground, F&& f) {
  std::uint32_t g = ground.bits();
  std::uint32_t s = 0;
  while (true) {
    f(ElemSet(s));
    if (s == g) break;
    s = (s - g) & g;
  }
}

}  // namespace matroid_tor

template <>
struct std::hash<matroid_tor::ElemSet> {
  std::size_t operator()(matroid_tor::ElemSet s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};

#endif  // MATROID_TOR_ELEM_SET_HPP
