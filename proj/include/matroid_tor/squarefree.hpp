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

#ifndef MATROID_TOR_SQUAREFREE_HPP
#define MATROID_TOR_SQUAREFREE_HPP

// Koszul computations specific to Sigma_{M,empty} over the difference ring:
// the finite square-free subcomplex and the explicit Tor_1 cycle basis.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "matroid_tor/bergman_fan.hpp"
#include "matroid_tor/exact_rank.hpp"
#include "matroid_tor/koszul.hpp"
#include "matroid_tor/matroid.hpp"
#include "matroid_tor/parallel.hpp"
#include "matroid_tor/polynomial.hpp"

namespace matroid_tor {

/// Exterior algebra element over the basis e_j = x_j - x_q (j != q), keyed
/// by the set of indices in increasing order.
using WedgeCombination = std::map<std::uint32_t, std::int64_t>;

/// Rewrites (x_{i1} - x_p) ^ ... ^ (x_{it} - x_p), i1 < ... < it, in the
/// basis with pivot q. Each factor is e_i - e_p with e_q = 0.
inline WedgeCombination rebase_wedge(ElemSet indices, int old_pivot, int new_pivot) {
  WedgeCombination acc{{0u, 1}};
  auto e = [&](int j) -> std::vector<std::pair<int, std::int64_t>> {
    if (j == new_pivot) return {};
    return {{j, 1}};
  };
  indices.for_each([&](int i) {
    std::vector<std::pair<int, std::int64_t>> factor;
    if (old_pivot == new_pivot) {
      factor = e(i);
    } else {
      for (auto [j, c] : e(i)) factor.emplace_back(j, c);
      for (auto [j, c] : e(old_pivot)) factor.emplace_back(j, -c);
    }
    WedgeCombination next;
    for (auto [mask, coeff] : acc) {
      for (auto [j, c] : factor) {
        const std::uint32_t bit = 1u << (j - 1);
        if (mask & bit) continue;
        // moving e_j from the right end past the larger indices already there
        const int larger = std::popcount(mask & ~((bit << 1) - 1u));
        const std::int64_t sign = (larger % 2 == 0) ? 1 : -1;
        next[mask | bit] += sign * coeff * c;
      }
    }
    acc.clear();
    for (auto [mask, coeff] : next)
      if (coeff != 0) acc[mask] = coeff;
  });
  return acc;
}

/// The square-free Koszul subcomplex of C[Sigma_{M,empty}] over the
/// difference ring. A basis element x_W (x) xi pairs a non-spanning set W
/// with a wedge of (x_i - x_p), p = max([n] - W), over indices i outside
/// W + p.
class SquarefreeKoszulComplex {
 public:
  struct Generator {
    ElemSet support;  // W
    ElemSet wedge;    // the indices i
  };

  explicit SquarefreeKoszulComplex(const Matroid& m) : matroid_(m) {
    matroid_.require_loopless("square-free Koszul complex");
    const int n = matroid_.n();
    const int r = matroid_.rank();
    basis_.assign(n, std::vector<std::vector<Generator>>(n));
    index_.assign(n, std::vector<std::unordered_map<std::uint64_t, std::uint32_t>>(n));
    for (int s = 0; s < n; ++s) {
      for_each_subset_of_size(matroid_.ground(), s, [&](ElemSet w) {
        if (matroid_.rank(w) >= r) return;
        const int p = pivot(w);
        const ElemSet free = matroid_.ground() - w - ElemSet::singleton(p);
        for (int t = 0; t <= free.size(); ++t)
          for_each_subset_of_size(free, t, [&](ElemSet xi) {
            index_[t][s].emplace(key(w, xi), static_cast<std::uint32_t>(basis_[t][s].size()));
            basis_[t][s].push_back({w, xi});
          });
      });
    }
  }

  const Matroid& matroid() const { return matroid_; }

  int pivot(ElemSet w) const { return (matroid_.ground() - w).max(); }

  std::size_t dimension(int t, int s) const {
    const int n = matroid_.n();
    if (t < 0 || s < 0 || t >= n || s >= n) return 0;
    return basis_[t][s].size();
  }

  const std::vector<Generator>& generators(int t, int s) const { return basis_.at(t).at(s); }

  /// Images of the degree-(t, s) generators in degree (t-1, s+1). Throws
  /// logic_error if some image leaves the square-free span.
  std::vector<SparseVector> differential(int t, int s) const {
    std::vector<SparseVector> out;
    if (t <= 0 || dimension(t, s) == 0) {
      out.resize(dimension(t, s));
      return out;
    }
    const int r = matroid_.rank();
    for (const Generator& g : basis_[t][s]) {
      const int p = pivot(g.support);
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> acc;
      int position = 0;
      g.wedge.for_each([&](int i) {
        const std::int64_t sign = (position++ % 2 == 0) ? 1 : -1;
        const ElemSet rest = g.wedge.without(i);
        // (x_i - x_p) x_W = x_{W+i} - x_{W+p}
        const ElemSet w_i = g.support.with(i);
        if (matroid_.rank(w_i) < r) acc[{w_i.bits(), rest.bits()}] += sign;
        const ElemSet w_p = g.support.with(p);
        if (matroid_.rank(w_p) < r)
          for (auto [mask, c] : rebase_wedge(rest, p, pivot(w_p))) acc[{w_p.bits(), mask}] -= sign * c;
      });
      SparseVector image;
      for (auto [k, c] : acc) {
        if (c == 0) continue;
        const ElemSet w(k.first), xi(k.second);
        if (!(w & xi).empty())
          throw std::logic_error("square-free differential left the subcomplex");
        image.emplace_back(index_[t - 1][s + 1].at(key(w, xi)), c);
      }
      std::sort(image.begin(), image.end());
      out.push_back(std::move(image));
    }
    return out;
  }

 private:
  static std::uint64_t key(ElemSet w, ElemSet xi) {
    return (static_cast<std::uint64_t>(w.bits()) << 32) | xi.bits();
  }

  Matroid matroid_;
  std::vector<std::vector<std::vector<Generator>>> basis_;  // [t][s]
  std::vector<std::vector<std::unordered_map<std::uint64_t, std::uint32_t>>> index_;
};

/// Tor of C[Sigma_{M,empty}] over the difference ring, computed on the
/// finite square-free subcomplex.
inline BigradedSeries squarefree_tor_table(const Matroid& m, int jobs = 1) {
  const SquarefreeKoszulComplex complex(m);
  const int n = m.n();
  std::vector<std::pair<int, int>> spots;
  for (int t = 1; t < n; ++t)
    for (int s = 0; s + 1 < n; ++s) spots.emplace_back(t, s);
  std::vector<std::int64_t> ranks(spots.size());
  parallel_for(spots.size(), jobs, [&](std::size_t k) {
    ranks[k] = static_cast<std::int64_t>(exact_rank(complex.differential(spots[k].first, spots[k].second)));
  });
  std::map<std::pair<int, int>, std::int64_t> rank_of;
  for (std::size_t k = 0; k < spots.size(); ++k) rank_of[spots[k]] = ranks[k];
  auto rk = [&](int t, int s) {
    auto it = rank_of.find({t, s});
    return it == rank_of.end() ? std::int64_t{0} : it->second;
  };
  BigradedSeries series;
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      series.add_term(t, s,
                      static_cast<std::int64_t>(complex.dimension(t, s)) - rk(t, s) - rk(t + 1, s - 1));
  return series;
}

/// eta_B = prod_{k in B - i} x_k (x) (x_i - x_j) with j = max EP(B) and
/// i = min of the fundamental circuit of B + j.
struct Tor1Cycle {
  ElemSet basis;
  int i = 0;
  int j = 0;
  ElemSet monomial() const { return basis.without(i); }
};

/// One cycle per basis other than the lexicographically largest.
inline std::vector<Tor1Cycle> tor1_cycles(const Matroid& m) {
  m.require_loopless("Tor_1 cycle basis");
  std::vector<Tor1Cycle> out;
  const ElemSet top = lex_max_basis(m);
  for (ElemSet b : m.bases()) {
    if (b == top) continue;
    const ElemSet ep = m.externally_passive_set(b);
    Tor1Cycle c;
    c.basis = b;
    c.j = ep.max();
    c.i = m.fundamental_circuit(b, c.j).min();
    out.push_back(c);
  }
  return out;
}

/// Checks of the Tor_1 cycles inside the full Koszul complex of
/// C[Sigma_{M,empty}] over the difference ring (global basis x_k - x_n).
struct Tor1Report {
  std::size_t count = 0;
  bool all_cocycles = false;
  /// rank of the cycle classes modulo boundaries
  std::size_t independent_classes = 0;
  /// sum over s of dim Tor_1(.)_s
  std::int64_t h1_dimension = 0;
};

/// Expresses eta_B as a vector in the source basis of koszul_matrix(., 1, r-1).
inline SparseVector tor1_cycle_vector(const StanleyReisnerRing& ring, const Tor1Cycle& c) {
  const BergmanFan& fan = ring.fan();
  const int n = fan.matroid().n();
  const std::size_t m = static_cast<std::size_t>(n - 1);
  MonomialKey key;
  c.monomial().for_each([&](int k) {
    key.push_back(static_cast<std::uint16_t>(fan.ray_index(Ray::element(k))));
  });
  std::sort(key.begin(), key.end());
  const std::int64_t mono = ring.degree(static_cast<int>(key.size())).find(key);
  if (mono < 0) throw std::logic_error("cycle monomial vanishes in the ring");
  // x_i - x_j = l_i - l_j with l_k = x_k - x_n and l_n = 0
  std::map<std::uint32_t, std::int64_t> acc;
  if (c.i != n) acc[static_cast<std::uint32_t>(mono * m + (c.i - 1))] += 1;
  if (c.j != n) acc[static_cast<std::uint32_t>(mono * m + (c.j - 1))] -= 1;
  SparseVector v;
  for (auto [k, val] : acc)
    if (val != 0) v.emplace_back(k, val);
  return v;
}

inline Tor1Report check_tor1_cycles(const Matroid& m) {
  Tor1Report report;
  const auto cycles = tor1_cycles(m);
  report.count = cycles.size();
  const BergmanFan fan = empty_filter_fan(m);
  const LinearFormSet forms = structure_forms(fan, RingChoice::OverSMcirc);
  const int s = m.rank() - 1;
  StanleyReisnerRing ring(fan);
  ring.ensure_degree(s + 1);

  const KoszulPiece d1 = koszul_matrix(ring, forms, 1, s);
  std::vector<SparseVector> vectors;
  report.all_cocycles = true;
  for (const auto& c : cycles) {
    SparseVector v = tor1_cycle_vector(ring, c);
    if (!d1.apply(v).empty()) report.all_cocycles = false;
    vectors.push_back(std::move(v));
  }
  std::vector<SparseVector> boundaries;
  if (s >= 1) boundaries = koszul_matrix(ring, forms, 2, s - 1).columns;
  const std::size_t base = exact_rank(boundaries);
  boundaries.insert(boundaries.end(), vectors.begin(), vectors.end());
  report.independent_classes = exact_rank(boundaries) - base;

  const BigradedSeries table = tor_table(fan, RingChoice::OverSMcirc, TorWindow{1, m.rank() + 1});
  for (const auto& [mono, coeff] : table.terms())
    if (mono.x == 1) report.h1_dimension += coeff;
  return report;
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_SQUAREFREE_HPP
