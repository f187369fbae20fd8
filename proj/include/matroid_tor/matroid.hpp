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

#ifndef MATROID_TOR_MATROID_HPP
#define MATROID_TOR_MATROID_HPP

#include <algorithm>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "matroid_tor/elem_set.hpp"
#include "matroid_tor/error.hpp"
#include "matroid_tor/polynomial.hpp"

namespace matroid_tor {

/// A matroid on the ground set {1,...,n}, given by its bases.
///
/// Construction validates the basis exchange axiom exhaustively. Instances
/// are immutable and may be shared across threads.
class Matroid {
 public:
  /// Validates and builds. Throws EmptyBasisFamily, ElementOutOfRange,
  /// UnequalCardinality or ExchangeAxiomViolation.
  static Matroid from_bases(int n, std::vector<ElemSet> bases) {
    if (n < 1 || n > kMaxGroundSet)
      throw Error(ErrorCode::ElementOutOfRange,
                  "ground set size must lie in [1, " + std::to_string(kMaxGroundSet) + "]");
    if (bases.empty()) throw Error(ErrorCode::EmptyBasisFamily, "no bases given");
    const ElemSet ground = ElemSet::full(n);
    for (ElemSet b : bases)
      if (!b.subset_of(ground))
        throw Error(ErrorCode::ElementOutOfRange,
                    "basis " + b.to_string() + " is not a subset of [" + std::to_string(n) + "]");
    const int r = bases.front().size();
    for (ElemSet b : bases)
      if (b.size() != r)
        throw Error(ErrorCode::UnequalCardinality,
                    "bases " + bases.front().to_string() + " and " + b.to_string() +
                        " differ in size");
    std::sort(bases.begin(), bases.end(), lex_less);
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    Matroid m(n, r, std::move(bases));
    m.check_exchange();
    return m;
  }

  /// U_{r,n}: every r-subset of [n] is a basis.
  static Matroid uniform(int r, int n) {
    if (n < 1 || n > kMaxGroundSet)
      throw Error(ErrorCode::InvalidRank, "ground set size out of range");
    if (r < 1 || r > n)
      throw Error(ErrorCode::InvalidRank,
                  "uniform matroid needs 1 <= r <= n, got r=" + std::to_string(r) +
                      " n=" + std::to_string(n));
    std::vector<ElemSet> bases;
    for_each_subset_of_size(ElemSet::full(n), r, [&](ElemSet s) { bases.push_back(s); });
    std::sort(bases.begin(), bases.end(), lex_less);
    return Matroid(n, r, std::move(bases));
  }

  int n() const { return n_; }
  int rank() const { return r_; }
  ElemSet ground() const { return ElemSet::full(n_); }
  /// Bases in lexicographic order of their sorted element lists.
  std::span<const ElemSet> bases() const { return bases_; }
  std::size_t num_bases() const { return bases_.size(); }
  bool is_basis(ElemSet b) const { return basis_lookup_.count(b.bits()) > 0; }

  /// Every element lies in some basis.
  bool is_loopless() const {
    ElemSet covered;
    for (ElemSet b : bases_) covered = covered | b;
    return covered == ground();
  }

  void require_loopless(const char* what) const {
    if (!is_loopless())
      throw Error(ErrorCode::LoopyMatroid, std::string(what) + " requires a loopless matroid");
  }

  /// Largest |A & B| over bases B.
  int rank(ElemSet a) const {
    int best = 0;
    for (ElemSet b : bases_) {
      best = std::max(best, (a & b).size());
      if (best == r_) break;
    }
    return best;
  }

  ElemSet closure(ElemSet a) const {
    const int ra = rank(a);
    ElemSet cl = a;
    ground().for_each([&](int x) {
      if (!a.contains(x) && rank(a.with(x)) == ra) cl.insert(x);
    });
    return cl;
  }

  bool is_flat(ElemSet a) const { return closure(a) == a; }

  /// Bases are the complements of the bases of this matroid.
  Matroid dual() const {
    std::vector<ElemSet> bases;
    bases.reserve(bases_.size());
    for (ElemSet b : bases_) bases.push_back(ground() - b);
    std::sort(bases.begin(), bases.end(), lex_less);
    return Matroid(n_, n_ - r_, std::move(bases));
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.bases_ == b.bases_;
  }

  /// Returns the unique circuit in B + x.
  ElemSet fundamental_circuit(ElemSet basis, int x) const {
    require_basis(basis);
    if (x < 1 || x > n_) throw Error(ErrorCode::ElementOutOfRange, "element out of range");
    if (basis.contains(x))
      throw Error(ErrorCode::ElementInBasis,
                  std::to_string(x) + " lies in basis " + basis.to_string());
    ElemSet circuit = ElemSet::singleton(x);
    basis.for_each([&](int y) {
      if (is_basis(basis.without(y).with(x))) circuit.insert(y);
    });
    return circuit;
  }

  /// EP(B): elements x outside B that are not the minimum of their
  /// fundamental circuit.
  ElemSet externally_passive_set(ElemSet basis) const {
    require_basis(basis);
    ElemSet ep;
    (ground() - basis).for_each([&](int x) {
      if (fundamental_circuit(basis, x).min() != x) ep.insert(x);
    });
    return ep;
  }

  ElemSet externally_active_set(ElemSet basis) const {
    return ground() - basis - externally_passive_set(basis);
  }

  void require_basis(ElemSet b) const {
    if (!is_basis(b)) throw Error(ErrorCode::NotABasis, b.to_string() + " is not a basis");
  }

 private:
  Matroid(int n, int r, std::vector<ElemSet> bases) : n_(n), r_(r), bases_(std::move(bases)) {
    basis_lookup_.reserve(bases_.size() * 2);
    for (ElemSet b : bases_) basis_lookup_.insert(b.bits());
  }

  void check_exchange() const {
    for (ElemSet b1 : bases_) {
      for (ElemSet b2 : bases_) {
        (b1 - b2).for_each([&](int x) {
          bool found = false;
          (b2 - b1).for_each([&](int y) {
            if (!found && is_basis(b1.without(x).with(y))) found = true;
          });
          if (!found)
            throw Error(ErrorCode::ExchangeAxiomViolation,
                        "B1=" + b1.to_string() + " B2=" + b2.to_string() +
                            " x=" + std::to_string(x) + " admits no exchange");
        });
      }
    }
  }

  int n_;
  int r_;
  std::vector<ElemSet> bases_;
  std::unordered_set<std::uint32_t> basis_lookup_;
};

/// A minor on a relabeled ground set. `original[k-1]` is the element of the
/// parent matroid that became element k; the relabeling preserves order.
struct Minor {
  Matroid matroid;
  std::vector<int> original;

  ElemSet to_parent(ElemSet s) const {
    ElemSet out;
    s.for_each([&](int e) { out.insert(original[e - 1]); });
    return out;
  }
};

namespace detail {

inline ElemSet compress(ElemSet s, ElemSet onto) {
  ElemSet out;
  s.for_each([&](int e) {
    if (onto.contains(e)) out.insert(onto.rank_of(e) + 1);
  });
  return out;
}

inline std::vector<int> relabel_map(ElemSet kept) { return kept.elements(); }

}  // namespace detail

/// M|W. Bases are the maximal independent subsets of W.
inline Minor restriction(const Matroid& m, ElemSet w) {
  if (w.empty()) throw Error(ErrorCode::EmptyGroundSet, "restriction to the empty set");
  if (!w.subset_of(m.ground()))
    throw Error(ErrorCode::ElementOutOfRange, "restriction set not in ground set");
  const int k = m.rank(w);
  std::vector<ElemSet> bases;
  for (ElemSet b : m.bases())
    if ((b & w).size() == k) bases.push_back(detail::compress(b & w, w));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Minor{Matroid::from_bases(w.size(), std::move(bases)), detail::relabel_map(w)};
}

/// M/F for a flat F. Bases are B - F over bases B meeting F in rank(F)
/// elements.
inline Minor contraction(const Matroid& m, ElemSet flat) {
  if (!flat.subset_of(m.ground()) || !m.is_flat(flat))
    throw Error(ErrorCode::NotAFlat, flat.to_string() + " is not a flat");
  if (flat.empty()) return Minor{m, detail::relabel_map(m.ground())};
  const ElemSet rest = m.ground() - flat;
  if (rest.empty()) throw Error(ErrorCode::EmptyGroundSet, "contraction by the whole ground set");
  const int k = m.rank(flat);
  std::vector<ElemSet> bases;
  for (ElemSet b : m.bases())
    if ((b & flat).size() == k) bases.push_back(detail::compress(b - flat, rest));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Minor{Matroid::from_bases(rest.size(), std::move(bases)), detail::relabel_map(rest)};
}

/// Relabels element e as perm[e-1]; perm is a permutation of 1..n.
inline Matroid relabel(const Matroid& m, std::span<const int> perm) {
  std::vector<ElemSet> bases;
  for (ElemSet b : m.bases()) {
    ElemSet out;
    b.for_each([&](int e) { out.insert(perm[e - 1]); });
    bases.push_back(out);
  }
  return Matroid::from_bases(m.n(), std::move(bases));
}

struct Activity {
  int internal_active = 0;
  int external_active = 0;
  int external_passive = 0;
  friend bool operator==(const Activity&, const Activity&) = default;
};

/// (ia, ea, ep) of a basis. Internal activity is read off the dual:
/// ia_M(B) = ea_{M*}(E - B).
inline Activity activity(const Matroid& m, ElemSet basis) {
  const ElemSet ep = m.externally_passive_set(basis);
  Activity a;
  a.external_passive = ep.size();
  a.external_active = m.n() - m.rank() - a.external_passive;
  const Matroid d = m.dual();
  a.internal_active = d.externally_active_set(m.ground() - basis).size();
  return a;
}

/// Sum over bases of x^ia y^ea.
inline TuttePolynomial tutte(const Matroid& m) {
  const Matroid d = m.dual();
  TuttePolynomial t;
  for (ElemSet b : m.bases()) {
    const int ea = m.externally_active_set(b).size();
    const int ia = d.externally_active_set(m.ground() - b).size();
    t.add_term(ia, ea, 1);
  }
  return t;
}

/// Bases with no externally active element, lexicographic order.
inline std::vector<ElemSet> nbc_bases(const Matroid& m) {
  std::vector<ElemSet> out;
  for (ElemSet b : m.bases())
    if (m.externally_active_set(b).empty()) out.push_back(b);
  return out;
}

inline ElemSet lex_max_basis(const Matroid& m) { return m.bases().back(); }

inline ElemSet lex_min_basis(const Matroid& m) { return m.bases().front(); }

/// Loopless with no parallel pairs.
inline bool is_simple(const Matroid& m) {
  if (!m.is_loopless()) return false;
  bool simple = true;
  for_each_subset_of_size(m.ground(), 2, [&](ElemSet pair) {
    if (m.rank(pair) < 2) simple = false;
  });
  return simple;
}

/// Restriction to the smallest element of each parallel class.
inline Minor simplification(const Matroid& m) {
  m.require_loopless("simplification");
  ElemSet kept;
  m.ground().for_each([&](int e) {
    if ((m.closure(ElemSet::singleton(e)) & kept).empty()) kept.insert(e);
  });
  return restriction(m, kept);
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_MATROID_HPP
