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

#ifndef MATROID_TOR_HOCHSTER_HPP
#define MATROID_TOR_HOCHSTER_HPP

// Reduced simplicial cohomology over Q and Hochster's formula for the
// non-spanning complex.

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "matroid_tor/bergman_fan.hpp"
#include "matroid_tor/exact_rank.hpp"
#include "matroid_tor/matroid.hpp"
#include "matroid_tor/parallel.hpp"
#include "matroid_tor/polynomial.hpp"

namespace matroid_tor {

/// Boundary of the faces of one size, as sparse vectors over the faces one
/// size smaller.
inline std::vector<SparseVector> simplicial_boundary(const std::vector<ElemSet>& faces,
                                                     const std::vector<ElemSet>& smaller) {
  std::unordered_map<ElemSet, std::uint32_t> index;
  for (std::size_t k = 0; k < smaller.size(); ++k) index.emplace(smaller[k], static_cast<std::uint32_t>(k));
  std::vector<SparseVector> out;
  out.reserve(faces.size());
  for (ElemSet f : faces) {
    SparseVector v;
    int position = 0;
    f.for_each([&](int e) {
      v.emplace_back(index.at(f.without(e)), (position++ % 2 == 0) ? 1 : -1);
    });
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  return out;
}

/// dims[i + 1] = dim H~^i(K; Q) for i >= -1. The complex {empty set} has
/// H~^{-1} of dimension 1.
inline std::vector<std::int64_t> reduced_cohomology_dims(const SimplicialComplex& k) {
  const auto faces = k.faces_by_size();
  const std::size_t levels = faces.size();
  // rank of the boundary from size j+1 faces to size j faces
  std::vector<std::int64_t> boundary_rank(levels + 1, 0);
  for (std::size_t j = 1; j < levels; ++j)
    boundary_rank[j] = static_cast<std::int64_t>(exact_rank(simplicial_boundary(faces[j], faces[j - 1])));
  std::vector<std::int64_t> dims(levels, 0);
  for (std::size_t j = 0; j < levels; ++j) {
    // faces of size j carry degree j - 1
    const std::int64_t outgoing = j + 1 < levels ? boundary_rank[j + 1] : 0;
    const std::int64_t incoming = boundary_rank[j];
    dims[j] = static_cast<std::int64_t>(faces[j].size()) - outgoing - incoming;
  }
  return dims;
}

/// Alternating face count sum_{i >= -1} (-1)^i f_i.
inline std::int64_t reduced_euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  const auto faces = k.faces_by_size();
  for (std::size_t j = 0; j < faces.size(); ++j)
    chi += (j % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(faces[j].size());
  return chi;
}

/// K|_W with W relabeled to 1..|W| in increasing order.
inline SimplicialComplex restrict_complex(const SimplicialComplex& k, ElemSet w) {
  SimplicialComplex out;
  out.num_vertices = w.size();
  std::vector<ElemSet> pieces;
  for (ElemSet f : k.facets) {
    ElemSet compressed;
    (f & w).for_each([&](int e) { compressed.insert(w.rank_of(e) + 1); });
    pieces.push_back(compressed);
  }
  out.facets = maximal_sets(std::move(pieces));
  return out;
}

namespace detail {

struct FacetListHash {
  std::size_t operator()(const std::vector<ElemSet>& v) const {
    std::size_t h = v.size();
    for (ElemSet s : v) h = h * 1000003u ^ std::hash<ElemSet>{}(s);
    return h;
  }
};

}  // namespace detail

/// Bigraded Betti numbers of C[NS(M)] over S_M via Hochster's formula.
/// Restrictions with identical facet lists share one cohomology computation.
class HochsterTable {
 public:
  explicit HochsterTable(const Matroid& m, int jobs = 1) : n_(m.n()) {
    m.require_loopless("Hochster's formula");
    const SimplicialComplex ns = non_spanning_complex(m);
    std::vector<ElemSet> subsets;
    for_each_subset(m.ground(), [&](ElemSet w) { subsets.push_back(w); });
    std::sort(subsets.begin(), subsets.end());

    std::vector<SimplicialComplex> restricted(subsets.size());
    for (std::size_t k = 0; k < subsets.size(); ++k) restricted[k] = restrict_complex(ns, subsets[k]);

    // distinct facet lists, in first-seen order
    std::unordered_map<std::vector<ElemSet>, std::size_t, detail::FacetListHash> class_of;
    std::vector<std::size_t> klass(subsets.size());
    std::vector<std::size_t> representative;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      auto [it, inserted] = class_of.try_emplace(restricted[k].facets, representative.size());
      if (inserted) representative.push_back(k);
      klass[k] = it->second;
    }
    std::vector<std::vector<std::int64_t>> dims(representative.size());
    parallel_for(representative.size(), jobs,
                 [&](std::size_t c) { dims[c] = reduced_cohomology_dims(restricted[representative[c]]); });
    distinct_complexes_ = representative.size();

    for (std::size_t k = 0; k < subsets.size(); ++k) {
      const auto& d = dims[klass[k]];
      const int size = subsets[k].size();
      for (std::size_t j = 0; j < d.size(); ++j) {
        // H~^{s-1} sits at index s
        const int s = static_cast<int>(j);
        const int t = size - s;
        if (d[j] != 0 && t >= 0) series_.add_term(t, s, d[j]);
      }
    }
  }

  std::int64_t betti(int t, int s) const { return series_.coefficient(t, s); }
  const BigradedSeries& series() const { return series_; }
  std::size_t distinct_complexes() const { return distinct_complexes_; }

 private:
  int n_;
  BigradedSeries series_;
  std::size_t distinct_complexes_ = 0;
};

/// sum_{|W| = t+s} dim H~^{s-1}(NS(M)|_W).
inline std::int64_t hochster_betti(const Matroid& m, int t, int s) {
  if (t < 0 || s < 0 || t + s > m.n()) {
    m.require_loopless("Hochster's formula");
    return 0;
  }
  return HochsterTable(m).betti(t, s);
}

/// True iff NS(M) has reduced cohomology only in degree r-2, of dimension
/// |NBC(M)|.
inline bool ns_cohomology_check(const Matroid& m) {
  const auto dims = reduced_cohomology_dims(non_spanning_complex(m));
  const std::int64_t nbc = static_cast<std::int64_t>(nbc_bases(m).size());
  const std::size_t target = static_cast<std::size_t>(m.rank() - 1);  // degree r-2
  for (std::size_t j = 0; j < std::max(dims.size(), target + 1); ++j) {
    const std::int64_t d = j < dims.size() ? dims[j] : 0;
    if (d != (j == target ? nbc : 0)) return false;
  }
  return true;
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_HOCHSTER_HPP
