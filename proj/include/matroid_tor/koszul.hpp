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

#ifndef MATROID_TOR_KOSZUL_HPP
#define MATROID_TOR_KOSZUL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid_tor/bergman_fan.hpp"
#include "matroid_tor/exact_rank.hpp"
#include "matroid_tor/parallel.hpp"
#include "matroid_tor/polynomial.hpp"

namespace matroid_tor {

/// Which polynomial ring acts on the Stanley-Reisner ring: S = C[x_1..x_n]
/// or its subring generated by the differences x_i - x_n.
enum class RingChoice { OverSM, OverSMcirc };

/// Degree-1 element of the Stanley-Reisner ring as (ray index, coefficient)
/// pairs, sorted by ray index.
using LinearForm = std::vector<std::pair<int, std::int64_t>>;

struct LinearFormSet {
  RingChoice ring = RingChoice::OverSM;
  std::vector<LinearForm> forms;
  std::size_t size() const { return forms.size(); }
};

namespace detail {

inline LinearForm structure_image(const BergmanFan& fan, int i) {
  LinearForm form;
  const auto& rays = fan.rays();
  for (int id = 0; id < static_cast<int>(rays.size()); ++id)
    if (rays[id].set.contains(i)) form.emplace_back(id, 1);
  return form;
}

inline LinearForm subtract(const LinearForm& a, const LinearForm& b) {
  std::map<int, std::int64_t> acc;
  for (auto [id, c] : a) acc[id] += c;
  for (auto [id, c] : b) acc[id] -= c;
  LinearForm out;
  for (auto [id, c] : acc)
    if (c != 0) out.emplace_back(id, c);
  return out;
}

}  // namespace detail

/// Images of the ring generators under x_i -> delta_i x_i + sum_{F in P, i
/// in F} x_F. OverSM gives the n images, OverSMcirc the n-1 differences
/// image(x_i) - image(x_n). Only rays present in the fan contribute.
inline LinearFormSet structure_forms(const BergmanFan& fan, RingChoice ring) {
  const int n = fan.matroid().n();
  LinearFormSet set;
  set.ring = ring;
  if (ring == RingChoice::OverSM) {
    for (int i = 1; i <= n; ++i) set.forms.push_back(detail::structure_image(fan, i));
  } else {
    const LinearForm last = detail::structure_image(fan, n);
    for (int i = 1; i < n; ++i)
      set.forms.push_back(detail::subtract(detail::structure_image(fan, i), last));
  }
  return set;
}

/// Sorted multiset of ray indices; its length is the degree.
using MonomialKey = std::vector<std::uint16_t>;

struct MonomialKeyHash {
  std::size_t operator()(const MonomialKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : k) h = (h ^ v) * 0x100000001b3ull;
    return h ^ k.size();
  }
};

/// Standard monomial basis of one degree, in the order of monomial_basis().
struct GradedBasis {
  std::vector<MonomialKey> monomials;
  std::unordered_map<MonomialKey, std::uint32_t, MonomialKeyHash> index;

  std::size_t size() const { return monomials.size(); }
  /// -1 when the monomial vanishes in the ring.
  std::int64_t find(const MonomialKey& k) const {
    auto it = index.find(k);
    return it == index.end() ? -1 : static_cast<std::int64_t>(it->second);
  }
};

/// Graded pieces of the Stanley-Reisner ring of a fan, built on demand.
/// Call `ensure_degree` before sharing across threads; lookups are then
/// read-only.
class StanleyReisnerRing {
 public:
  explicit StanleyReisnerRing(const BergmanFan& fan) : fan_(&fan) {}

  const BergmanFan& fan() const { return *fan_; }

  void ensure_degree(int s) {
    while (static_cast<int>(pieces_.size()) <= s) {
      const int d = static_cast<int>(pieces_.size());
      GradedBasis piece;
      for (const ExponentVector& e : monomial_basis(*fan_, d)) {
        MonomialKey key;
        for (std::size_t ray = 0; ray < e.size(); ++ray)
          for (int k = 0; k < e[ray]; ++k) key.push_back(static_cast<std::uint16_t>(ray));
        piece.index.emplace(key, static_cast<std::uint32_t>(piece.monomials.size()));
        piece.monomials.push_back(std::move(key));
      }
      pieces_.push_back(std::move(piece));
      if (d > 0) times_.push_back(build_times(d - 1));
    }
  }

  const GradedBasis& degree(int s) const { return pieces_.at(s); }

  /// Index in degree s+1 of monomial i of degree s times a ray, or -1, at
  /// position i * num_rays + ray. Needs degree s+1.
  const std::vector<std::int32_t>& times(int s) const { return times_.at(s); }

  std::size_t dimension(int s) const { return s < 0 ? 0 : pieces_.at(s).size(); }

 private:
  std::vector<std::int32_t> build_times(int s) const {
    const std::size_t rays = fan_->num_rays();
    const GradedBasis& src = pieces_[s];
    const GradedBasis& dst = pieces_[s + 1];
    std::vector<std::int32_t> table(src.size() * rays, -1);
    MonomialKey product;
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t ray = 0; ray < rays; ++ray) {
        product = src.monomials[i];
        product.insert(std::upper_bound(product.begin(), product.end(), ray),
                       static_cast<std::uint16_t>(ray));
        table[i * rays + ray] = static_cast<std::int32_t>(dst.find(product));
      }
    return table;
  }

  const BergmanFan* fan_;
  std::vector<GradedBasis> pieces_;
  std::vector<std::vector<std::int32_t>> times_;
};

namespace detail {

/// Position of a k-subset (bit mask) among all k-subsets in colex order.
inline std::uint64_t colex_rank(std::uint32_t mask) {
  std::uint64_t r = 0;
  int k = 1;
  for (std::uint32_t b = mask; b != 0; b &= b - 1, ++k)
    r += static_cast<std::uint64_t>(binomial(std::countr_zero(b), k));
  return r;
}

inline std::vector<std::uint32_t> subsets_colex(int m, int k) {
  std::vector<std::uint32_t> out;
  for_each_subset_of_size(ElemSet::full(m), k, [&](ElemSet s) { out.push_back(s.bits()); });
  return out;
}

}  // namespace detail

/// Matrix of d : A_s (x) wedge^t -> A_{s+1} (x) wedge^{t-1}.
///
/// Source basis: (monomial index i, t-subset of forms J) at position
/// i * C(m, t) + colex(J); the target is indexed the same way. `columns[c]`
/// is the image of source basis element c.
struct KoszulPiece {
  int t = 0;
  int s = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> columns;

  std::vector<std::vector<std::int64_t>> dense() const {
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c)
      for (auto [r, v] : columns[c]) m[r][c] = v;
    return m;
  }

  /// d applied to a vector given in the source basis.
  SparseVector apply(const SparseVector& v) const {
    std::map<std::uint32_t, std::int64_t> acc;
    for (auto [c, coeff] : v)
      for (auto [r, val] : columns.at(c)) acc[r] += coeff * val;
    SparseVector out;
    for (auto [r, val] : acc)
      if (val != 0) out.emplace_back(r, val);
    return out;
  }
};

/// d(a (x) l_{j1} ^ ... ^ l_{jt}) = sum_k (-1)^(k-1) (l_{jk} a) (x) (omit l_{jk}),
/// j1 < ... < jt. Products whose support is not a face vanish.
/// `ring` must hold degrees s and s+1.
inline KoszulPiece koszul_matrix(const StanleyReisnerRing& ring, const LinearFormSet& forms, int t,
                                 int s) {
  const int m = static_cast<int>(forms.size());
  KoszulPiece piece;
  piece.t = t;
  piece.s = s;
  if (t < 0 || t > m || s < 0) return piece;
  const GradedBasis& src = ring.degree(s);
  const std::uint64_t src_wedges = static_cast<std::uint64_t>(detail::binomial(m, t));
  piece.cols = src.size() * src_wedges;
  piece.columns.resize(piece.cols);
  if (t == 0) return piece;
  const GradedBasis& dst = ring.degree(s + 1);
  const std::uint64_t dst_wedges = static_cast<std::uint64_t>(detail::binomial(m, t - 1));
  piece.rows = dst.size() * dst_wedges;

  const auto masks = detail::subsets_colex(m, t);
  const std::vector<std::int32_t>& times = ring.times(s);
  const std::size_t rays = ring.fan().num_rays();
  SparseVector acc;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::int32_t* row = times.data() + i * rays;
    for (std::size_t w = 0; w < masks.size(); ++w) {
      acc.clear();
      const std::uint32_t mask = masks[w];
      int position = 0;
      for (std::uint32_t b = mask; b != 0; b &= b - 1, ++position) {
        const int j = std::countr_zero(b);
        const std::int64_t sign = (position % 2 == 0) ? 1 : -1;
        const std::uint64_t rest = detail::colex_rank(mask & ~(1u << j));
        for (auto [ray, coeff] : forms.forms[j]) {
          const std::int32_t target = row[ray];
          if (target < 0) continue;
          acc.emplace_back(static_cast<std::uint32_t>(target * dst_wedges + rest), sign * coeff);
        }
      }
      std::sort(acc.begin(), acc.end());
      SparseVector& col = piece.columns[i * src_wedges + w];
      for (std::size_t k = 0; k < acc.size();) {
        std::int64_t v = 0;
        std::size_t e = k;
        for (; e < acc.size() && acc[e].first == acc[k].first; ++e) v += acc[e].second;
        if (v != 0) col.emplace_back(acc[k].first, v);
        k = e;
      }
    }
  }
  return piece;
}

inline KoszulPiece koszul_matrix(const BergmanFan& fan, const LinearFormSet& forms, int t, int s) {
  StanleyReisnerRing ring(fan);
  ring.ensure_degree(s + 1);
  return koszul_matrix(ring, forms, t, s);
}

/// dim Tor_t(C[fan])_s: dim A_s * C(m,t) - rank d_{t,s} - rank d_{t+1,s-1}.
inline std::int64_t tor_dimension(const BergmanFan& fan, const LinearFormSet& forms, int t, int s) {
  const int m = static_cast<int>(forms.size());
  if (t < 0 || t > m || s < 0) return 0;
  StanleyReisnerRing ring(fan);
  ring.ensure_degree(s + 1);
  const std::int64_t chains =
      static_cast<std::int64_t>(ring.dimension(s)) * detail::binomial(m, t);
  const std::int64_t out_rank =
      static_cast<std::int64_t>(exact_rank(koszul_matrix(ring, forms, t, s).columns));
  const std::int64_t in_rank =
      (s >= 1 && t + 1 <= m)
          ? static_cast<std::int64_t>(exact_rank(koszul_matrix(ring, forms, t + 1, s - 1).columns))
          : 0;
  return chains - out_rank - in_rank;
}

/// Bidegree window of a Tor table.
struct TorWindow {
  int t_max = -1;  // -1: number of forms
  int s_max = -1;  // -1: rank + 1
};

/// Hilbert series of Tor over the chosen ring, truncated to the window.
/// Each needed differential rank is an independent job; results are
/// merged in a fixed order so the output does not depend on `jobs`.
///
/// For Sigma_{M,empty} and Sigma_M over the difference ring, entries with
/// s > r-1 are known to vanish; a nonzero entry there raises logic_error.
inline BigradedSeries tor_table(const BergmanFan& fan, RingChoice ring_choice,
                                TorWindow window = {}, int jobs = 1) {
  const LinearFormSet forms = structure_forms(fan, ring_choice);
  const int m = static_cast<int>(forms.size());
  const int r = fan.matroid().rank();
  const int t_max = window.t_max < 0 ? m : std::min(window.t_max, m);
  const int s_max = window.s_max < 0 ? r + 1 : window.s_max;

  StanleyReisnerRing ring(fan);
  ring.ensure_degree(s_max + 1);

  std::vector<std::pair<int, int>> jobs_list;
  for (int t = 1; t <= std::min(m, t_max + 1); ++t)
    for (int s = 0; s <= s_max; ++s)
      if (t <= t_max || s <= s_max - 1) jobs_list.emplace_back(t, s);
  std::vector<std::int64_t> ranks(jobs_list.size(), 0);
  parallel_for(jobs_list.size(), jobs, [&](std::size_t k) {
    auto [t, s] = jobs_list[k];
    ranks[k] = static_cast<std::int64_t>(exact_rank(koszul_matrix(ring, forms, t, s).columns));
  });
  std::map<std::pair<int, int>, std::int64_t> rank_of;
  for (std::size_t k = 0; k < jobs_list.size(); ++k) rank_of[jobs_list[k]] = ranks[k];
  auto lookup = [&](int t, int s) -> std::int64_t {
    auto it = rank_of.find({t, s});
    return it == rank_of.end() ? 0 : it->second;
  };

  BigradedSeries series;
  for (int t = 0; t <= t_max; ++t)
    for (int s = 0; s <= s_max; ++s) {
      const std::int64_t chains =
          static_cast<std::int64_t>(ring.dimension(s)) * detail::binomial(m, t);
      series.add_term(t, s, chains - lookup(t, s) - lookup(t + 1, s - 1));
    }

  const bool extreme_filter = !fan.is_subfan() &&
                              (fan.filter().empty() || fan.filter().size() + 2 == flats(fan.matroid()).size());
  if (ring_choice == RingChoice::OverSMcirc && extreme_filter)
    for (const auto& [mono, c] : series.terms())
      if (mono.y > r - 1)
        throw std::logic_error("nonzero Tor in Stanley-Reisner degree " + std::to_string(mono.y) +
                               " above r-1; the differential is wrong");
  return series;
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_KOSZUL_HPP
