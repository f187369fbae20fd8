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

#ifndef MATROID_TOR_EXACT_RANK_HPP
#define MATROID_TOR_EXACT_RANK_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

namespace matroid_tor {

/// Sparse integer vector: (coordinate, value) pairs with strictly increasing
/// coordinates and nonzero values.
using SparseVector = std::vector<std::pair<std::uint32_t, std::int64_t>>;

namespace detail {

struct IntegerOverflow {};

/// int64 arithmetic that throws IntegerOverflow instead of wrapping.
struct CheckedInt64 {
  using value_type = std::int64_t;
  static value_type from(std::int64_t v) { return v; }
  static bool is_zero(value_type v) { return v == 0; }
  static value_type mul(value_type a, value_type b) {
    value_type out;
    if (__builtin_mul_overflow(a, b, &out)) throw IntegerOverflow{};
    return out;
  }
  static value_type sub(value_type a, value_type b) {
    value_type out;
    if (__builtin_sub_overflow(a, b, &out)) throw IntegerOverflow{};
    return out;
  }
  static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
  static value_type div(value_type a, value_type b) { return a / b; }
  static bool is_unit(value_type a) { return a == 1 || a == -1; }
};

struct BigInteger {
  using value_type = mpz_class;
  static value_type from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static value_type div(const value_type& a, const value_type& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool is_unit(const value_type& a) { return a == 1 || a == -1; }
};

/// Row echelon insertion over the integers. Each incoming vector is reduced
/// against the pivot whose leading coordinate matches its own; elimination
/// steps are fraction-free (cross-multiplication followed by division by
/// the content) so every intermediate vector stays integral.
template <typename Ops>
class EchelonBasis {
 public:
  using T = typename Ops::value_type;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  /// Returns true if v was independent of the rows inserted so far.
  bool insert(Row v) {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) {
        make_primitive(v);
        pivots_.emplace(v.front().first, rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      v = eliminate(v, rows_[it->second]);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  // a * v - b * pivot, with (a, b) chosen to cancel the leading entries.
  Row eliminate(const Row& v, const Row& pivot) {
    const T& lead_v = v.front().second;
    const T& lead_p = pivot.front().second;
    T a, b;
    bool scale_v;
    if (Ops::is_unit(lead_p)) {
      a = Ops::from(1);
      b = Ops::mul(lead_v, lead_p);  // lead_p == +-1 so this is lead_v / lead_p
      scale_v = false;
    } else {
      T g = Ops::gcd(lead_v, lead_p);
      a = Ops::div(lead_p, g);
      b = Ops::div(lead_v, g);
      scale_v = true;
    }
    Row out;
    out.reserve(v.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < v.size() || j < pivot.size()) {
      if (j >= pivot.size() || (i < v.size() && v[i].first < pivot[j].first)) {
        out.emplace_back(v[i].first, scale_v ? Ops::mul(a, v[i].second) : v[i].second);
        ++i;
      } else if (i >= v.size() || pivot[j].first < v[i].first) {
        out.emplace_back(pivot[j].first, Ops::sub(Ops::from(0), Ops::mul(b, pivot[j].second)));
        ++j;
      } else {
        T val = Ops::sub(scale_v ? Ops::mul(a, v[i].second) : v[i].second,
                         Ops::mul(b, pivot[j].second));
        if (!Ops::is_zero(val)) out.emplace_back(v[i].first, std::move(val));
        ++i;
        ++j;
      }
    }
    if (scale_v) make_primitive(out);
    return out;
  }

  static void make_primitive(Row& v) {
    if (v.empty()) return;
    T g = Ops::from(0);
    for (const auto& [idx, val] : v) {
      g = Ops::gcd(g, val);
      if (Ops::is_unit(g)) return;
    }
    if (Ops::is_zero(g)) return;
    for (auto& [idx, val] : v) val = Ops::div(val, g);
  }

  std::unordered_map<std::uint32_t, std::size_t> pivots_;
  std::vector<Row> rows_;
};

template <typename Ops>
std::size_t echelon_rank(const std::vector<const SparseVector*>& vectors) {
  EchelonBasis<Ops> basis;
  for (const SparseVector* v : vectors) {
    typename EchelonBasis<Ops>::Row row;
    row.reserve(v->size());
    for (const auto& [idx, val] : *v) row.emplace_back(idx, Ops::from(val));
    basis.insert(std::move(row));
  }
  return basis.rank();
}

class UnionFind {
 public:
  std::uint32_t find(std::uint32_t x) {
    auto [it, inserted] = parent_.try_emplace(x, x);
    if (inserted) return x;
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::uint32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::unordered_map<std::uint32_t, std::uint32_t> parent_;
};

}  // namespace detail

/// Rank over Q of a family of integer vectors, computed exactly.
///
/// The family is split into blocks that share no coordinates (connected
/// components of the incidence graph) and each block is reduced separately,
/// sparsest vectors first. Arithmetic runs on overflow-checked int64 and a
/// block that overflows is redone with GMP integers.
inline std::size_t exact_rank(const std::vector<SparseVector>& vectors) {
  detail::UnionFind uf;
  for (const auto& v : vectors)
    for (std::size_t k = 1; k < v.size(); ++k) uf.unite(v[0].first, v[k].first);

  std::unordered_map<std::uint32_t, std::vector<const SparseVector*>> blocks;
  for (const auto& v : vectors)
    if (!v.empty()) blocks[uf.find(v[0].first)].push_back(&v);

  std::size_t rank = 0;
  for (auto& [root, block] : blocks) {
    std::stable_sort(block.begin(), block.end(),
                     [](const SparseVector* a, const SparseVector* b) { return a->size() < b->size(); });
    try {
      rank += detail::echelon_rank<detail::CheckedInt64>(block);
    } catch (const detail::IntegerOverflow&) {
      rank += detail::echelon_rank<detail::BigInteger>(block);
    }
  }
  return rank;
}

/// Dense convenience overload; rows are the vectors.
inline std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<SparseVector> sparse;
  sparse.reserve(rows.size());
  for (const auto& row : rows) {
    SparseVector v;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) v.emplace_back(static_cast<std::uint32_t>(j), row[j]);
    sparse.push_back(std::move(v));
  }
  return exact_rank(sparse);
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_EXACT_RANK_HPP
