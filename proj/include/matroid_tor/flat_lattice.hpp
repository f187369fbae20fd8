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

#ifndef MATROID_TOR_FLAT_LATTICE_HPP
#define MATROID_TOR_FLAT_LATTICE_HPP

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "matroid_tor/elem_set.hpp"
#include "matroid_tor/error.hpp"
#include "matroid_tor/matroid.hpp"

namespace matroid_tor {

/// The lattice of flats, stored level by level. Level 0 is {closure(empty)}
/// and level r is {[n]}; within a level flats are in lexicographic order.
class FlatLattice {
 public:
  int rank() const { return static_cast<int>(levels_.size()) - 1; }
  ElemSet top() const { return levels_.back().front(); }
  ElemSet bottom() const { return levels_.front().front(); }

  const std::vector<ElemSet>& flats_of_rank(int k) const { return levels_.at(k); }
  const std::vector<std::vector<ElemSet>>& levels() const { return levels_; }

  /// Proper nonempty flats (ranks 1..r-1), by increasing rank then lex.
  std::vector<ElemSet> proper_flats() const {
    std::vector<ElemSet> out;
    for (int k = 1; k < rank(); ++k)
      out.insert(out.end(), levels_[k].begin(), levels_[k].end());
    return out;
  }

  bool contains(ElemSet f) const { return lookup_.count(f) > 0; }
  bool is_proper(ElemSet f) const { return contains(f) && f != top() && f != bottom(); }
  int rank_of(ElemSet f) const {
    for (int k = 0; k <= rank(); ++k)
      if (std::find(levels_[k].begin(), levels_[k].end(), f) != levels_[k].end()) return k;
    throw Error(ErrorCode::UnknownFlat, f.to_string() + " is not a flat");
  }

  std::size_t size() const { return lookup_.size(); }

 private:
  friend FlatLattice flats(const Matroid& m);
  std::vector<std::vector<ElemSet>> levels_;
  std::unordered_set<ElemSet> lookup_;
};

/// Level k+1 is obtained by closing F + x for every rank-k flat F and x
/// outside F.
inline FlatLattice flats(const Matroid& m) {
  m.require_loopless("flat enumeration");
  FlatLattice lat;
  lat.levels_.push_back({m.closure(ElemSet{})});
  for (int k = 0; k < m.rank(); ++k) {
    std::set<ElemSet, decltype(&lex_less)> next(&lex_less);
    for (ElemSet f : lat.levels_[k]) {
      (m.ground() - f).for_each([&](int x) { next.insert(m.closure(f.with(x))); });
    }
    lat.levels_.emplace_back(next.begin(), next.end());
  }
  for (const auto& level : lat.levels_)
    for (ElemSet f : level) lat.lookup_.insert(f);
  return lat;
}

/// Upward-closed set of proper nonempty flats.
class OrderFilter {
 public:
  OrderFilter() = default;
  explicit OrderFilter(std::vector<ElemSet> flats) : flats_(std::move(flats)) {
    std::sort(flats_.begin(), flats_.end());
    flats_.erase(std::unique(flats_.begin(), flats_.end()), flats_.end());
  }

  bool contains(ElemSet f) const { return std::binary_search(flats_.begin(), flats_.end(), f); }
  const std::vector<ElemSet>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  bool empty() const { return flats_.empty(); }

  OrderFilter with(ElemSet f) const {
    auto v = flats_;
    v.push_back(f);
    return OrderFilter(std::move(v));
  }

  friend bool operator==(const OrderFilter&, const OrderFilter&) = default;

 private:
  std::vector<ElemSet> flats_;  // sorted by bit pattern
};

/// True iff P is upward closed among proper flats. Throws UnknownFlat if P
/// holds something that is not a proper nonempty flat.
inline bool is_order_filter(const FlatLattice& lattice, const std::vector<ElemSet>& p) {
  for (ElemSet f : p)
    if (!lattice.is_proper(f))
      throw Error(ErrorCode::UnknownFlat, f.to_string() + " is not a proper nonempty flat");
  const std::unordered_set<ElemSet> in(p.begin(), p.end());
  for (ElemSet f : p)
    for (ElemSet g : lattice.proper_flats())
      if (f.proper_subset_of(g) && !in.count(g)) return false;
  return true;
}

inline bool is_order_filter(const FlatLattice& lattice, const OrderFilter& p) {
  return is_order_filter(lattice, p.flats());
}

inline OrderFilter full_filter(const FlatLattice& lattice) {
  return OrderFilter(lattice.proper_flats());
}

/// Centers Z_1, ..., Z_q of a sequence of matroidal flips from the empty
/// filter to the full one.
struct FlipSequence {
  std::vector<ElemSet> centers;

  /// {Z_1, ..., Z_k}
  OrderFilter prefix(std::size_t k) const {
    return OrderFilter(std::vector<ElemSet>(centers.begin(), centers.begin() + k));
  }
};

/// Flats by decreasing rank, lexicographic within a rank. Each center is
/// maximal among the flats not yet added.
inline FlipSequence flip_sequence(const Matroid& m) {
  const FlatLattice lat = flats(m);
  FlipSequence seq;
  for (int k = lat.rank() - 1; k >= 1; --k)
    for (ElemSet f : lat.flats_of_rank(k)) seq.centers.push_back(f);
  return seq;
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_FLAT_LATTICE_HPP
