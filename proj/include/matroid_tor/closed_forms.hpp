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

#ifndef MATROID_TOR_CLOSED_FORMS_HPP
#define MATROID_TOR_CLOSED_FORMS_HPP

// Closed-form Hilbert series of Tor, evaluated from basis activities.

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "matroid_tor/bergman_fan.hpp"
#include "matroid_tor/error.hpp"
#include "matroid_tor/koszul.hpp"
#include "matroid_tor/matroid.hpp"
#include "matroid_tor/polynomial.hpp"

namespace matroid_tor {

/// Tor over S_M of C[Sigma_{M,empty}]: 1 + x y^{r-1} sum_B (1+x)^{ep(B)}.
inline BivariatePoly hilb_sm_empty(const Matroid& m) {
  m.require_loopless("hilb_sm_empty");
  BivariatePoly sum;
  for (ElemSet b : m.bases()) sum += BivariatePoly::one_plus_x_pow(m.externally_passive_set(b).size());
  return BivariatePoly(1) + BivariatePoly::monomial(1, m.rank() - 1) * sum;
}

/// The same series written through external activity,
/// 1 + x y^{r-1} sum_B (1+x)^{n-r-ea(B)}, i.e. the Tutte evaluation
/// 1 + x (1+x)^{n-r} y^{r-1} T_M(1, 1/(1+x)).
inline BivariatePoly tutte_specialization(const Matroid& m) {
  m.require_loopless("tutte_specialization");
  const int corank = m.n() - m.rank();
  BivariatePoly sum;
  for (ElemSet b : m.bases())
    sum += BivariatePoly::one_plus_x_pow(corank - activity(m, b).external_active);
  return BivariatePoly(1) + BivariatePoly::monomial(1, m.rank() - 1) * sum;
}

/// Tor over the difference ring of C[Sigma_{M,empty}]:
/// 1 + y + ... + y^{r-1} + x y^{r-1} sum_{B != B_max} (1+x)^{ep(B)-1}.
inline BivariatePoly hilb_smo_empty(const Matroid& m) {
  m.require_loopless("hilb_smo_empty");
  const ElemSet top = lex_max_basis(m);
  BivariatePoly sum;
  for (ElemSet b : m.bases())
    if (b != top) sum += BivariatePoly::one_plus_x_pow(m.externally_passive_set(b).size() - 1);
  return BivariatePoly::y_range(0, m.rank() - 1) + BivariatePoly::monomial(1, m.rank() - 1) * sum;
}

/// 1 + y + x y sum_{B != B_max} (1+x)^{ep(B)-1}, the full Bergman fan series
/// of a simple rank 2 matroid over the difference ring. Parallel elements
/// share one flat ray, so a non-simple M picks up a factor (1+x) per element
/// removed by simplification.
inline BivariatePoly hilb_rank2(const Matroid& m) {
  if (m.rank() != 2)
    throw Error(ErrorCode::WrongRank, "hilb_rank2 needs rank 2, got " + std::to_string(m.rank()));
  return hilb_smo_empty(m);
}

/// The exceptional term of the flip with center Z:
/// (Tor series of Sigma_{M|Z, empty} minus its constant term) * tor_of_contraction.
inline BivariatePoly ez_series(const Matroid& m, ElemSet z, const BivariatePoly& tor_of_contraction) {
  if (z.empty() || z == m.ground() || !z.subset_of(m.ground()) || !m.is_flat(z))
    throw Error(ErrorCode::NotAFlat, z.to_string() + " is not a proper nonempty flat");
  const Matroid restricted = restriction(m, z).matroid;
  return (hilb_smo_empty(restricted) - BivariatePoly(1)) * tor_of_contraction;
}

namespace detail {

class UniformSeriesCache {
 public:
  bool lookup(int r, int k, BivariatePoly& out) {
    std::lock_guard lock(mutex_);
    auto it = table_.find({r, k});
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(int r, int k, const BivariatePoly& p) {
    std::lock_guard lock(mutex_);
    table_.emplace(std::pair{r, k}, p);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, BivariatePoly> table_;
};

inline UniformSeriesCache& uniform_series_cache() {
  static UniformSeriesCache cache;
  return cache;
}

}  // namespace detail

/// Tor series of the full Bergman fan of U_{r, r+k} over the difference
/// ring. Rank 1 gives (1+x)^k; larger ranks recurse on smaller uniform
/// matroids. The boolean case k = 0 is computed directly.
inline BivariatePoly hilb_uniform(int r, int k) {
  if (r < 1 || k < 0 || r + k > kMaxGroundSet)
    throw Error(ErrorCode::InvalidParams,
                "hilb_uniform(" + std::to_string(r) + ", " + std::to_string(k) + ")");
  BivariatePoly out;
  if (detail::uniform_series_cache().lookup(r, k, out)) return out;
  if (r == 1) {
    out = BivariatePoly::one_plus_x_pow(k);
  } else if (k == 0) {
    out = tor_table(full_fan(Matroid::uniform(r, r)), RingChoice::OverSMcirc);
  } else {
    out = hilb_smo_empty(Matroid::uniform(r, r + k));
    for (int i = 1; i < r; ++i)
      out += BivariatePoly(detail::binomial(r + k, i)) * BivariatePoly::y_range(1, i - 1) *
             hilb_uniform(r - i, k);
  }
  detail::uniform_series_cache().store(r, k, out);
  return out;
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_CLOSED_FORMS_HPP
