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

#ifndef MATROID_TOR_VERIFY_HPP
#define MATROID_TOR_VERIFY_HPP

// Identity suites run over a corpus of matroids. Each suite counts its
// checks and records a counterexample for every failure.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "matroid_tor/bergman_fan.hpp"
#include "matroid_tor/closed_forms.hpp"
#include "matroid_tor/corpus.hpp"
#include "matroid_tor/flat_lattice.hpp"
#include "matroid_tor/hochster.hpp"
#include "matroid_tor/io.hpp"
#include "matroid_tor/koszul.hpp"
#include "matroid_tor/matroid.hpp"
#include "matroid_tor/squarefree.hpp"

namespace matroid_tor {

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) failures.push_back(describe());
  }
  void merge(const SuiteReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

struct VerifyOptions {
  int max_n = 6;
  int random_count = 20;
  int jobs = 1;
  std::uint32_t seed = 7;
  /// Restricts every suite to this matroid instead of the corpus.
  std::optional<Matroid> only;
};

inline std::vector<std::string> suite_names() {
  return {"tutte", "smo", "hochster", "top", "uniform", "flips", "structure", "change-of-rings"};
}

namespace detail {

inline std::vector<NamedMatroid> suite_corpus(const VerifyOptions& opt, int cap = 31) {
  if (opt.only) return {{"input", *opt.only}};
  std::vector<NamedMatroid> out;
  for (auto& nm : corpus(opt.max_n, opt.random_count))
    if (nm.matroid.n() <= cap) out.push_back(std::move(nm));
  return out;
}

inline std::string describe(const NamedMatroid& nm, const std::string& what) {
  return nm.name + " " + matroid_to_json(nm.matroid).dump() + ": " + what;
}

inline std::string mismatch(const BivariatePoly& got, const BivariatePoly& want) {
  return "got " + got.to_string() + ", expected " + want.to_string();
}

inline BivariatePoly truncate(const BivariatePoly& p, int t_max, int s_max) {
  BivariatePoly q;
  for (const auto& [m, c] : p.terms())
    if (m.x <= t_max && m.y <= s_max) q.add_term(m.x, m.y, c);
  return q;
}

/// T_M(1, 0), read off the Tutte polynomial.
inline std::int64_t tutte_at_1_0(const TuttePolynomial& t) {
  std::int64_t v = 0;
  for (const auto& [m, c] : t.terms())
    if (m.y == 0) v += c;
  return v;
}

/// Matroid test through independent sets: all members have the same size
/// and their subsets satisfy the augmentation axiom.
inline bool augmentation_oracle(const std::vector<ElemSet>& family) {
  if (family.empty()) return false;
  std::set<std::uint32_t> independent;
  for (ElemSet b : family) {
    if (b.size() != family.front().size()) return false;
    for_each_subset(b, [&](ElemSet s) { independent.insert(s.bits()); });
  }
  for (std::uint32_t a : independent)
    for (std::uint32_t b : independent) {
      const ElemSet small(a), large(b);
      if (small.size() >= large.size()) continue;
      bool augmentable = false;
      (large - small).for_each([&](int x) {
        if (independent.count(small.with(x).bits())) augmentable = true;
      });
      if (!augmentable) return false;
    }
  return true;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace detail

/// tor over S_M of Sigma_{M,empty} against both activity formulas.
inline SuiteReport verify_tutte(const VerifyOptions& opt) {
  SuiteReport rep{"tutte"};
  for (const auto& nm : detail::suite_corpus(opt)) {
    const auto koszul = tor_table(empty_filter_fan(nm.matroid), RingChoice::OverSM, {}, opt.jobs);
    const auto sm = hilb_sm_empty(nm.matroid);
    const auto ts = tutte_specialization(nm.matroid);
    rep.expect(koszul == sm, [&] { return detail::describe(nm, "Koszul vs ep formula " + detail::mismatch(koszul, sm)); });
    rep.expect(sm == ts, [&] { return detail::describe(nm, "ep vs ea formula " + detail::mismatch(sm, ts)); });
  }
  return rep;
}

/// tor over the difference ring of Sigma_{M,empty}: full complex, square-free
/// subcomplex and closed form.
inline SuiteReport verify_smo(const VerifyOptions& opt) {
  SuiteReport rep{"smo"};
  for (const auto& nm : detail::suite_corpus(opt)) {
    const auto koszul = tor_table(empty_filter_fan(nm.matroid), RingChoice::OverSMcirc, {}, opt.jobs);
    const auto sf = squarefree_tor_table(nm.matroid, opt.jobs);
    const auto closed = hilb_smo_empty(nm.matroid);
    rep.expect(koszul == sf, [&] { return detail::describe(nm, "Koszul vs square-free " + detail::mismatch(koszul, sf)); });
    rep.expect(sf == closed, [&] { return detail::describe(nm, "square-free vs formula " + detail::mismatch(sf, closed)); });
    if (nm.matroid.rank() == 2) {
      const auto full = tor_table(full_fan(nm.matroid), RingChoice::OverSMcirc, {}, opt.jobs);
      const Minor si = simplification(nm.matroid);
      const int removed = nm.matroid.n() - si.matroid.n();
      const auto r2 = BivariatePoly::one_plus_x_pow(removed) * hilb_rank2(si.matroid);
      rep.expect(full == r2, [&] { return detail::describe(nm, "rank 2 full fan " + detail::mismatch(full, r2)); });
      if (removed == 0)
        rep.expect(full == hilb_rank2(nm.matroid),
                   [&] { return detail::describe(nm, "rank 2 formula " + detail::mismatch(full, hilb_rank2(nm.matroid))); });
    }
  }
  return rep;
}

/// Hochster's formula against Koszul over S_M, plus the cohomology of NS(M).
inline SuiteReport verify_hochster(const VerifyOptions& opt) {
  SuiteReport rep{"hochster"};
  for (const auto& nm : detail::suite_corpus(opt, 6)) {
    const Matroid& m = nm.matroid;
    const auto koszul = tor_table(empty_filter_fan(m), RingChoice::OverSM, {}, opt.jobs);
    const auto hochster = detail::truncate(HochsterTable(m, opt.jobs).series(), m.n(), m.rank() + 1);
    rep.expect(koszul == hochster, [&] { return detail::describe(nm, "Hochster " + detail::mismatch(hochster, koszul)); });
    rep.expect(ns_cohomology_check(m), [&] { return detail::describe(nm, "NS(M) cohomology is not concentrated"); });
    const SimplicialComplex ns = non_spanning_complex(m);
    const auto dims = reduced_cohomology_dims(ns);
    std::int64_t alternating = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) alternating += (j % 2 == 0 ? -1 : 1) * dims[j];
    rep.expect(alternating == reduced_euler_characteristic(ns),
               [&] { return detail::describe(nm, "Euler characteristic mismatch"); });
    // local cohomology trichotomy over all restrictions
    bool trichotomy = true;
    for_each_subset(m.ground(), [&](ElemSet w) {
      if (w.empty()) return;
      const int rank = m.rank(w);
      const auto d = reduced_cohomology_dims(restrict_complex(ns, w));
      for (std::size_t j = 0; j < d.size(); ++j) {
        std::int64_t want = 0;
        if (rank == m.rank() && static_cast<int>(j) == m.rank() - 1)
          want = static_cast<std::int64_t>(nbc_bases(restriction(m, w).matroid).size());
        if (d[j] != want) trichotomy = false;
      }
      if (rank == m.rank() && static_cast<int>(d.size()) < m.rank()) trichotomy = false;
    });
    rep.expect(trichotomy, [&] { return detail::describe(nm, "local cohomology trichotomy fails"); });
  }
  return rep;
}

/// Vanishing and top-degree statements on Sigma_M and Sigma_{M,empty}.
inline SuiteReport verify_top(const VerifyOptions& opt) {
  SuiteReport rep{"top"};
  for (const auto& nm : detail::suite_corpus(opt, 6)) {
    const Matroid& m = nm.matroid;
    const int n = m.n(), r = m.rank();
    const std::int64_t nbc = static_cast<std::int64_t>(nbc_bases(m).size());
    const std::int64_t t10 = detail::tutte_at_1_0(tutte(m));
    rep.expect(nbc == t10 && nbc > 0, [&] { return detail::describe(nm, "|NBC| differs from T(1,0)"); });
    for (bool full : {true, false}) {
      const BergmanFan fan = full ? full_fan(m) : empty_filter_fan(m);
      const auto series = tor_table(fan, RingChoice::OverSMcirc, {n - 1, r + 1}, opt.jobs);
      bool vanish = true;
      for (const auto& [mono, c] : series.terms()) {
        if (mono.x > n - r || mono.y > r - 1) vanish = false;
        if (!full && mono.x > 0 && mono.y < r - 1) vanish = false;
      }
      const std::string which = full ? "full fan" : "empty filter fan";
      rep.expect(vanish, [&] { return detail::describe(nm, which + " vanishing fails: " + series.to_string()); });
      rep.expect(series.coefficient(n - r, r - 1) == nbc,
                 [&] { return detail::describe(nm, which + " top entry is not |NBC|: " + series.to_string()); });
    }
  }
  return rep;
}

/// Uniform recursion against brute force for r + k <= max_n, or the single
/// uniform matroid given.
inline SuiteReport verify_uniform(const VerifyOptions& opt) {
  SuiteReport rep{"uniform"};
  std::vector<std::pair<int, int>> pairs;
  if (opt.only) {
    const Matroid& m = *opt.only;
    if (m == Matroid::uniform(m.rank(), m.n())) pairs.emplace_back(m.rank(), m.n() - m.rank());
  } else {
    for (int n = 2; n <= opt.max_n; ++n)
      for (int r = 1; r < n; ++r) pairs.emplace_back(r, n - r);
  }
  for (auto [r, k] : pairs) {
    const auto closed = hilb_uniform(r, k);
    const auto brute = tor_table(full_fan(Matroid::uniform(r, r + k)), RingChoice::OverSMcirc, {}, opt.jobs);
    rep.expect(closed == brute, [&] {
      return "U" + std::to_string(r) + "," + std::to_string(r + k) + ": " + detail::mismatch(closed, brute);
    });
    const std::int64_t top = closed.coefficient(k, r - 1);
    rep.expect(top == detail::binomial(r + k - 1, r - 1), [&] {
      return "U" + std::to_string(r) + "," + std::to_string(r + k) + ": top coefficient " + std::to_string(top);
    });
  }
  return rep;
}

/// Flip bookkeeping. Uniform matroids: the whole table moves by the
/// exceptional term at every flip. All matroids: the t = 0 row does, and
/// the Pi_+ subfan splits as a product.
inline SuiteReport verify_flips(const VerifyOptions& opt) {
  SuiteReport rep{"flips"};
  for (const auto& nm : detail::suite_corpus(opt, 6)) {
    const Matroid& m = nm.matroid;
    const int r = m.rank();
    const TorWindow window{m.n() - 1, r + 1};
    const bool uniform = m == Matroid::uniform(r, m.n());
    const FlipSequence seq = flip_sequence(m);
    auto previous = tor_table(BergmanFan(m, seq.prefix(0)), RingChoice::OverSMcirc, window, opt.jobs);
    for (std::size_t k = 0; k < seq.centers.size(); ++k) {
      const ElemSet z = seq.centers[k];
      const auto next = tor_table(BergmanFan(m, seq.prefix(k + 1)), RingChoice::OverSMcirc, window, opt.jobs);
      const Matroid contracted = contraction(m, z).matroid;
      const auto contracted_tor = tor_table(full_fan(contracted), RingChoice::OverSMcirc, window, opt.jobs);
      const auto ez = ez_series(m, z, contracted_tor);
      const std::string where = "flip " + std::to_string(k) + " center " + z.to_string();
      if (uniform)
        rep.expect(next == detail::truncate(previous + ez, window.t_max, window.s_max),
                   [&] { return detail::describe(nm, where + " " + detail::mismatch(next, previous + ez)); });
      rep.expect(next.row(0) == detail::truncate(previous + ez, 0, window.s_max),
                 [&] { return detail::describe(nm, where + " Chow row " + detail::mismatch(next.row(0), (previous + ez).row(0))); });
      const FlipSubfans sub = flip_subfans(m, seq.prefix(k), z);
      const auto pi_plus = tor_table(sub.pi_plus, RingChoice::OverSMcirc, window, opt.jobs);
      const auto product = detail::truncate(hilb_smo_empty(restriction(m, z).matroid) * contracted_tor,
                                            window.t_max, window.s_max);
      rep.expect(pi_plus == product,
                 [&] { return detail::describe(nm, where + " Pi_+ product " + detail::mismatch(pi_plus, product)); });
      previous = next;
    }
  }
  return rep;
}

/// d o d = 0, face oracle closure, exchange validation, activity lemmas,
/// relabeling invariance, Tor_1 cycles and the flip subfan identities.
inline SuiteReport verify_structure(const VerifyOptions& opt) {
  SuiteReport rep{"structure"};
  std::mt19937 rng(opt.seed);
  const auto matroids = detail::suite_corpus(opt, 6);

  for (const auto& nm : matroids) {
    const Matroid& m = nm.matroid;
    const int n = m.n(), r = m.rank();

    // Koszul differentials square to zero
    for (bool full : {false, true}) {
      if (full && n > 5) continue;
      const BergmanFan fan = full ? full_fan(m) : empty_filter_fan(m);
      StanleyReisnerRing ring(fan);
      ring.ensure_degree(r + 2);
      for (RingChoice choice : {RingChoice::OverSM, RingChoice::OverSMcirc}) {
        const LinearFormSet forms = structure_forms(fan, choice);
        const int mforms = static_cast<int>(forms.size());
        bool zero = true;
        for (int t = 2; t <= mforms; ++t)
          for (int s = 0; s + 1 <= r + 1; ++s) {
            const KoszulPiece d1 = koszul_matrix(ring, forms, t, s);
            const KoszulPiece d2 = koszul_matrix(ring, forms, t - 1, s + 1);
            for (const auto& col : d1.columns)
              if (!d2.apply(col).empty()) zero = false;
          }
        rep.expect(zero, [&] { return detail::describe(nm, "d o d != 0"); });
      }
    }

    // face oracle is downward closed; Sigma_{M,empty} faces avoid bases
    for (bool full : {false, true}) {
      const BergmanFan fan = full ? full_fan(m) : empty_filter_fan(m);
      bool closed = true;
      for (const RaySet& face : fan.faces())
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
          RaySet smaller = face;
          smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
          if (!fan.is_face(smaller)) closed = false;
        }
      std::uniform_int_distribution<int> coin(0, 3);
      for (int trial = 0; trial < 50; ++trial) {
        RaySet s;
        for (int id = 0; id < fan.num_rays(); ++id)
          if (coin(rng) == 0) s.push_back(id);
        if (!fan.is_face(s)) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          RaySet smaller = s;
          smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
          if (!fan.is_face(smaller)) closed = false;
        }
      }
      rep.expect(closed, [&] { return detail::describe(nm, "face oracle is not downward closed"); });
    }
    {
      const BergmanFan fan = empty_filter_fan(m);
      bool match = true;
      for_each_subset(m.ground(), [&](ElemSet s) {
        RaySet ids;
        bool all_rays = true;
        s.for_each([&](int e) {
          const int id = fan.ray_index(Ray::element(e));
          if (id < 0) all_rays = false;
          ids.push_back(id);
        });
        const bool has_basis = std::any_of(m.bases().begin(), m.bases().end(),
                                           [&](ElemSet b) { return b.subset_of(s); });
        if ((all_rays && fan.is_face(ids)) == has_basis) match = false;
      });
      rep.expect(match, [&] { return detail::describe(nm, "empty filter faces are not the basis-free sets"); });
    }

    // externally passive binomial identity and the lex-max lemma
    {
      bool identity = true, lexmax = true;
      const ElemSet top = lex_max_basis(m);
      for (ElemSet b : m.bases()) {
        const int ep = m.externally_passive_set(b).size();
        if ((ep == 0) != (b == top)) lexmax = false;
        std::vector<std::int64_t> count(n + 1, 0);
        for_each_subset(m.ground() - b, [&](ElemSet extra) {
          const ElemSet w = b | extra;
          const Minor sub = restriction(m, w);
          ElemSet local;
          b.for_each([&](int e) { local.insert(w.rank_of(e) + 1); });
          if (activity(sub.matroid, local).external_active == 0) ++count[extra.size()];
        });
        for (int i = 0; i <= n; ++i)
          if (count[i] != (i <= ep ? detail::binomial(ep, i) : 0)) identity = false;
      }
      rep.expect(identity, [&] { return detail::describe(nm, "externally passive binomial identity fails"); });
      rep.expect(lexmax, [&] { return detail::describe(nm, "ep(B) = 0 does not single out the lex-max basis"); });
    }

    // relabeling invariance; series vanish above s = r-1, so that window is complete
    {
      const TorWindow window{-1, r - 1};
      auto invariants = [&](const Matroid& x) {
        return std::tuple(tutte(x), nbc_bases(x).size(),
                          tor_table(empty_filter_fan(x), RingChoice::OverSM, window, opt.jobs),
                          tor_table(empty_filter_fan(x), RingChoice::OverSMcirc, window, opt.jobs),
                          tor_table(full_fan(x), RingChoice::OverSMcirc, window, opt.jobs));
      };
      std::optional<decltype(invariants(m))> reference;
      for (int trial = 0; trial < 10; ++trial) {
        const auto perm = detail::random_permutation(n, rng);
        const Matroid p = relabel(m, perm);
        if (p == m) continue;  // an automorphism
        if (!reference) reference = invariants(m);
        const bool same = invariants(p) == *reference;
        rep.expect(same, [&] {
          std::string s;
          for (int v : perm) s += std::to_string(v) + " ";
          return detail::describe(nm, "not invariant under permutation " + s);
        });
      }
    }

    // Tor_1 cycles
    {
      const Tor1Report t1 = check_tor1_cycles(m);
      const std::size_t want = m.num_bases() - 1;
      rep.expect(t1.count == want && t1.all_cocycles && t1.independent_classes == want &&
                     t1.h1_dimension == static_cast<std::int64_t>(want),
                 [&] {
                   return detail::describe(nm, "Tor_1 cycles: count " + std::to_string(t1.count) + ", independent " +
                                                   std::to_string(t1.independent_classes) + ", H1 " +
                                                   std::to_string(t1.h1_dimension));
                 });
    }

    // flip subfan identities
    {
      const FlipSequence seq = flip_sequence(m);
      bool ok = true;
      for (std::size_t k = 0; k < seq.centers.size(); ++k) {
        const FlipSubfans sub = flip_subfans(m, seq.prefix(k), seq.centers[k]);
        const auto hp = sub.h_plus.cones();
        const auto hm = sub.h_minus.cones();
        if (hp != hm) ok = false;
        auto meet = [](const std::vector<Cone>& a, const std::vector<Cone>& b) {
          std::vector<Cone> out;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
          return out;
        };
        if (meet(sub.pi_plus.cones(), hp) != meet(sub.pi_minus.cones(), hm)) ok = false;
      }
      rep.expect(ok, [&] { return detail::describe(nm, "flip subfan identities fail"); });
    }
  }

  // exchange-axiom validation against an independent-set oracle
  {
    std::mt19937 fam_rng(opt.seed + 1);
    bool agree = true;
    std::size_t valid_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const int n = std::uniform_int_distribution<int>(2, 5)(fam_rng);
      const int r = std::uniform_int_distribution<int>(1, n - 1)(fam_rng);
      std::vector<ElemSet> all;
      for_each_subset_of_size(ElemSet::full(n), r, [&](ElemSet s) { all.push_back(s); });
      std::vector<ElemSet> family;
      // drop few sets so that valid families keep turning up
      std::uniform_int_distribution<int> keep(0, trial % 2 == 0 ? 5 : 1);
      for (ElemSet s : all)
        if (keep(fam_rng) != 0) family.push_back(s);
      if (family.empty()) continue;
      const bool oracle = detail::augmentation_oracle(family);
      bool accepted = true;
      try {
        (void)Matroid::from_bases(n, family);
      } catch (const Error& e) {
        accepted = false;
        if (e.code() != ErrorCode::ExchangeAxiomViolation) agree = false;
      }
      if (accepted != oracle) agree = false;
      valid_seen += oracle;
    }
    rep.expect(agree && valid_seen > 0, [] { return std::string("exchange validation disagrees with the oracle"); });
  }
  return rep;
}

/// (1+x) * hilb over S° = sum_{i=1}^{r-1} y^i + x sum_{i=0}^{r-2} y^i + hilb over S.
inline SuiteReport verify_change_of_rings(const VerifyOptions& opt) {
  SuiteReport rep{"change-of-rings"};
  for (const auto& nm : detail::suite_corpus(opt)) {
    const Matroid& m = nm.matroid;
    const int r = m.rank();
    const auto smo = tor_table(empty_filter_fan(m), RingChoice::OverSMcirc, {}, opt.jobs);
    const auto sm = tor_table(empty_filter_fan(m), RingChoice::OverSM, {}, opt.jobs);
    const auto lhs = (BivariatePoly(1) + BivariatePoly::x()) * smo;
    const auto rhs = BivariatePoly::y_range(1, r - 1) + BivariatePoly::x() * BivariatePoly::y_range(0, r - 2) + sm;
    rep.expect(lhs == rhs, [&] { return detail::describe(nm, detail::mismatch(lhs, rhs)); });
  }
  return rep;
}

/// Runs a suite by name; "poincare" is accepted for "smo" and "vanishing"
/// for "top". Unknown names raise InvalidParams.
inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "tutte") return verify_tutte(opt);
  if (name == "smo" || name == "poincare") return verify_smo(opt);
  if (name == "hochster") return verify_hochster(opt);
  if (name == "top" || name == "vanishing") return verify_top(opt);
  if (name == "uniform") return verify_uniform(opt);
  if (name == "flips") return verify_flips(opt);
  if (name == "structure") return verify_structure(opt);
  if (name == "change-of-rings") return verify_change_of_rings(opt);
  throw Error(ErrorCode::InvalidParams, "unknown suite '" + name + "'");
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_VERIFY_HPP
