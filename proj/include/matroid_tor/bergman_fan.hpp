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

#ifndef MATROID_TOR_BERGMAN_FAN_HPP
#define MATROID_TOR_BERGMAN_FAN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "matroid_tor/elem_set.hpp"
#include "matroid_tor/error.hpp"
#include "matroid_tor/flat_lattice.hpp"
#include "matroid_tor/matroid.hpp"

namespace matroid_tor {

/// A ray of a Bergman fan: e_i for an element, or e_F for a flat of the
/// order filter.
struct Ray {
  enum class Kind { Element, Flat };
  Kind kind = Kind::Element;
  /// {i} for Element(i), F for Flat(F).
  ElemSet set;

  static Ray element(int i) { return Ray{Kind::Element, ElemSet::singleton(i)}; }
  static Ray flat(ElemSet f) { return Ray{Kind::Flat, f}; }

  bool is_element() const { return kind == Kind::Element; }
  int element() const { return set.min(); }

  std::string label() const {
    return is_element() ? "x" + std::to_string(element()) : "x_" + set.to_string();
  }

  friend bool operator==(const Ray&, const Ray&) = default;
  friend auto operator<=>(const Ray& a, const Ray& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.set <=> b.set;
  }
};

/// The cone sigma_{I < F}: element part I and a strictly increasing chain of
/// flats.
struct Cone {
  ElemSet elements;
  std::vector<ElemSet> chain;
  friend bool operator==(const Cone&, const Cone&) = default;
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.elements != b.elements) return a.elements < b.elements;
    return a.chain < b.chain;
  }
};

/// Sorted list of ray indices.
using RaySet = std::vector<int>;

struct RaySetHash {
  std::size_t operator()(const RaySet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : s) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

/// Bergman fan of a loopless matroid relative to an order filter, or a
/// subfan of one cut out by a cone predicate.
///
/// The fan is purely combinatorial: rays plus a face oracle. All faces are
/// enumerated eagerly at construction.
class BergmanFan {
 public:
  /// Extra condition a cone (I, chain) must meet to belong to a subfan. Must
  /// be closed under taking faces.
  using ConeFilter = std::function<bool(ElemSet, std::span<const ElemSet>)>;

  BergmanFan(Matroid m, OrderFilter p, ConeFilter subfan = {})
      : matroid_(std::move(m)), filter_(std::move(p)), subfan_(std::move(subfan)) {
    matroid_.require_loopless("Bergman fan construction");
    const FlatLattice lat = flats(matroid_);
    if (!is_order_filter(lat, filter_))
      throw Error(ErrorCode::InvalidOrderFilter, "flat set is not upward closed");

    for (int i = 1; i <= matroid_.n(); ++i)
      if (is_cone(ElemSet::singleton(i), {})) rays_.push_back(Ray::element(i));
    // Flat rays by increasing rank, lexicographic within a rank.
    for (ElemSet f : lat.proper_flats()) {
      const ElemSet chain[] = {f};
      if (filter_.contains(f) && is_cone(ElemSet{}, chain)) rays_.push_back(Ray::flat(f));
    }
    enumerate_faces();
  }

  const Matroid& matroid() const { return matroid_; }
  const OrderFilter& filter() const { return filter_; }
  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t num_rays() const { return rays_.size(); }
  /// True when built with a cone predicate (one of the flip subfans).
  bool is_subfan() const { return static_cast<bool>(subfan_); }

  int ray_index(const Ray& ray) const {
    auto it = std::find(rays_.begin(), rays_.end(), ray);
    return it == rays_.end() ? -1 : static_cast<int>(it - rays_.begin());
  }

  /// Whether sigma_{I < chain} is a cone of this fan. The chain may be given
  /// in any order.
  bool is_cone(ElemSet elements, std::span<const ElemSet> chain_in) const {
    std::vector<ElemSet> chain(chain_in.begin(), chain_in.end());
    std::sort(chain.begin(), chain.end(),
              [](ElemSet a, ElemSet b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (!filter_.contains(chain[k])) return false;
      if (k > 0 && !chain[k - 1].proper_subset_of(chain[k])) return false;
    }
    if (!chain.empty() && !elements.subset_of(chain.front())) return false;
    // I spans no element of P + {[n]}.
    if (matroid_.rank(elements) == matroid_.rank()) return false;
    if (!elements.empty() && filter_.contains(matroid_.closure(elements))) return false;
    if (subfan_ && !subfan_(elements, chain)) return false;
    return true;
  }

  /// Decodes a ray set into (I, chain); the chain is sorted increasingly.
  Cone to_cone(std::span<const int> ray_ids) const {
    Cone c;
    for (int id : ray_ids) {
      if (id < 0 || static_cast<std::size_t>(id) >= rays_.size())
        throw Error(ErrorCode::UnknownRay, "ray index " + std::to_string(id));
      const Ray& ray = rays_[id];
      if (ray.is_element())
        c.elements.insert(ray.element());
      else
        c.chain.push_back(ray.set);
    }
    std::sort(c.chain.begin(), c.chain.end(), [](ElemSet a, ElemSet b) { return a.size() < b.size(); });
    return c;
  }

  bool is_face(std::span<const int> ray_ids) const {
    RaySet sorted(ray_ids.begin(), ray_ids.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int id : sorted)
      if (id < 0 || static_cast<std::size_t>(id) >= rays_.size())
        throw Error(ErrorCode::UnknownRay, "ray index " + std::to_string(id));
    return face_lookup_.count(sorted) > 0;
  }

  /// Face test by ray description. Throws UnknownRay for rays not in the fan.
  bool is_face(const std::vector<Ray>& rays) const {
    RaySet ids;
    for (const Ray& r : rays) {
      int id = ray_index(r);
      if (id < 0) throw Error(ErrorCode::UnknownRay, r.label() + " is not a ray of this fan");
      ids.push_back(id);
    }
    return is_face(ids);
  }

  /// All faces (as sorted ray sets), including the empty face, by increasing size.
  const std::vector<RaySet>& faces() const { return faces_; }

  /// All cones, sorted.
  std::vector<Cone> cones() const {
    std::vector<Cone> out;
    out.reserve(faces_.size());
    for (const RaySet& f : faces_) out.push_back(to_cone(f));
    std::sort(out.begin(), out.end());
    return out;
  }

  int dimension() const {
    std::size_t d = 0;
    for (const auto& f : faces_) d = std::max(d, f.size());
    return static_cast<int>(d);
  }

 private:
  void enumerate_faces() {
    faces_.push_back({});
    face_lookup_.insert(RaySet{});
    for (std::size_t head = 0; head < faces_.size(); ++head) {
      const RaySet base = faces_[head];
      const int start = base.empty() ? 0 : base.back() + 1;
      for (int id = start; id < static_cast<int>(rays_.size()); ++id) {
        RaySet next = base;
        next.push_back(id);
        // Downward closure: every facet of `next` must already be a face.
        bool ok = true;
        for (std::size_t k = 0; k + 1 < next.size() && ok; ++k) {
          RaySet sub;
          for (std::size_t j = 0; j < next.size(); ++j)
            if (j != k) sub.push_back(next[j]);
          ok = face_lookup_.count(sub) > 0;
        }
        if (!ok) continue;
        Cone c = to_cone(next);
        if (is_cone(c.elements, c.chain)) {
          face_lookup_.insert(next);
          faces_.push_back(std::move(next));
        }
      }
    }
  }

  Matroid matroid_;
  OrderFilter filter_;
  ConeFilter subfan_;
  std::vector<Ray> rays_;
  std::vector<RaySet> faces_;
  std::unordered_set<RaySet, RaySetHash> face_lookup_;
};

/// Sigma_{M, empty}.
inline BergmanFan empty_filter_fan(const Matroid& m) { return BergmanFan(m, OrderFilter{}); }

/// Sigma_M, the fan of the full order filter.
inline BergmanFan full_fan(const Matroid& m) {
  m.require_loopless("Bergman fan construction");
  return BergmanFan(m, full_filter(flats(m)));
}

/// Minimal non-faces among subsets of rays: the squarefree generators of the
/// Stanley-Reisner ideal. Sorted.
inline std::vector<RaySet> sr_minimal_nonfaces(const BergmanFan& fan) {
  std::set<RaySet> out;
  for (const RaySet& face : fan.faces()) {
    for (int id = 0; id < static_cast<int>(fan.num_rays()); ++id) {
      if (std::binary_search(face.begin(), face.end(), id)) continue;
      RaySet cand = face;
      cand.insert(std::upper_bound(cand.begin(), cand.end(), id), id);
      if (fan.is_face(cand)) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < cand.size() && minimal; ++k) {
        RaySet sub;
        for (std::size_t j = 0; j < cand.size(); ++j)
          if (j != k) sub.push_back(cand[j]);
        minimal = fan.is_face(sub);
      }
      if (minimal) out.insert(cand);
    }
  }
  return {out.begin(), out.end()};
}

namespace detail {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace detail

/// dim of the degree-s part of the Stanley-Reisner ring: monomials whose
/// support is a face.
inline std::int64_t graded_dimension(const BergmanFan& fan, int s) {
  if (s < 0) return 0;
  if (s == 0) return 1;
  std::int64_t total = 0;
  for (const RaySet& f : fan.faces())
    if (!f.empty()) total += detail::binomial(s - 1, static_cast<int>(f.size()) - 1);
  return total;
}

/// Exponent vector over fan.rays().
using ExponentVector = std::vector<int>;

/// Standard monomials of degree s, lexicographically decreasing in the
/// exponent vectors (x1^2 before x1*x2 before x2^2). Built face by face:
/// choose the support, then distribute the remaining degree.
inline std::vector<ExponentVector> monomial_basis(const BergmanFan& fan, int s) {
  std::vector<ExponentVector> out;
  if (s < 0) return out;
  const std::size_t m = fan.num_rays();
  if (s == 0) {
    out.emplace_back(m, 0);
    return out;
  }
  for (const RaySet& f : fan.faces()) {
    const int k = static_cast<int>(f.size());
    if (k == 0 || k > s) continue;
    // compositions of s into k positive parts
    std::vector<int> parts(k, 1);
    parts[k - 1] = s - k + 1;
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == k - 1) {
        parts[pos] = remaining;
        ExponentVector e(m, 0);
        for (int j = 0; j < k; ++j) e[f[j]] = parts[j];
        out.push_back(std::move(e));
        return;
      }
      for (int v = 1; v <= remaining - (k - 1 - pos); ++v) {
        parts[pos] = v;
        rec(pos + 1, remaining - v);
      }
    };
    rec(0, s);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Simplicial complex on vertices 1..num_vertices given by its facets. A
/// single empty facet is the complex {empty}; no facets at all is the void
/// complex.
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<ElemSet> facets;

  bool is_face(ElemSet s) const {
    return std::any_of(facets.begin(), facets.end(), [&](ElemSet f) { return s.subset_of(f); });
  }

  /// All faces grouped by cardinality (index k holds the (k-1)-dimensional
  /// faces), each group sorted by bit pattern.
  std::vector<std::vector<ElemSet>> faces_by_size() const {
    std::set<ElemSet> all;
    for (ElemSet f : facets) for_each_subset(f, [&](ElemSet s) { all.insert(s); });
    std::vector<std::vector<ElemSet>> out;
    for (ElemSet s : all) {
      if (static_cast<std::size_t>(s.size()) >= out.size()) out.resize(s.size() + 1);
      out[s.size()].push_back(s);
    }
    return out;
  }
};

/// Keeps only the inclusion-maximal sets, sorted.
inline std::vector<ElemSet> maximal_sets(std::vector<ElemSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElemSet> out;
  for (ElemSet s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(),
                                 [&](ElemSet t) { return s.proper_subset_of(t); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

/// NS(M): subsets of rank < r. Its facets are the hyperplanes of M.
inline SimplicialComplex non_spanning_complex(const Matroid& m) {
  m.require_loopless("non-spanning complex");
  const FlatLattice lat = flats(m);
  SimplicialComplex k;
  k.num_vertices = m.n();
  k.facets = lat.flats_of_rank(m.rank() - 1);
  std::sort(k.facets.begin(), k.facets.end());
  return k;
}

/// The four subfans attached to the flip P_- -> P_+ = P_- + {Z}.
struct FlipSubfans {
  BergmanFan pi_plus;    // in Sigma_{M,P+}: I strictly inside Z, Z below the chain
  BergmanFan h_plus;     // in Sigma_{M,P+}: Z not in the chain
  BergmanFan pi_minus;   // in Sigma_{M,P-}: I inside Z, Z below the chain
  BergmanFan h_minus;    // in Sigma_{M,P-}: I does not span Z
};

namespace detail {

inline bool below_chain(ElemSet z, std::span<const ElemSet> chain) {
  return std::all_of(chain.begin(), chain.end(), [&](ElemSet f) { return z.subset_of(f); });
}

}  // namespace detail

inline FlipSubfans flip_subfans(const Matroid& m, const OrderFilter& p_minus, ElemSet z) {
  m.require_loopless("flip subfans");
  const FlatLattice lat = flats(m);
  if (!lat.is_proper(z))
    throw Error(ErrorCode::InvalidFlip, z.to_string() + " is not a proper nonempty flat");
  if (p_minus.contains(z))
    throw Error(ErrorCode::InvalidFlip, "center already lies in the order filter");
  const OrderFilter p_plus = p_minus.with(z);
  if (!is_order_filter(lat, p_minus) || !is_order_filter(lat, p_plus))
    throw Error(ErrorCode::InvalidFlip, "flip does not connect two order filters");

  auto pi_plus = [z](ElemSet i, std::span<const ElemSet> chain) {
    return i.proper_subset_of(z) && detail::below_chain(z, chain);
  };
  auto h_plus = [z](ElemSet, std::span<const ElemSet> chain) {
    return std::find(chain.begin(), chain.end(), z) == chain.end();
  };
  auto pi_minus = [z](ElemSet i, std::span<const ElemSet> chain) {
    return i.subset_of(z) && detail::below_chain(z, chain);
  };
  auto h_minus = [m, z](ElemSet i, std::span<const ElemSet>) { return m.closure(i) != z; };
  return FlipSubfans{BergmanFan(m, p_plus, pi_plus), BergmanFan(m, p_plus, h_plus),
                     BergmanFan(m, p_minus, pi_minus), BergmanFan(m, p_minus, h_minus)};
}

/// Subfan of `fan` made of the cones that also satisfy `extra`.
inline BergmanFan restrict_fan(const BergmanFan& fan, BergmanFan::ConeFilter extra) {
  auto base = fan;  // copy keeps the original predicate alive
  auto combined = [base, extra](ElemSet i, std::span<const ElemSet> chain) {
    return base.is_cone(i, chain) && extra(i, chain);
  };
  return BergmanFan(fan.matroid(), fan.filter(), combined);
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_BERGMAN_FAN_HPP
