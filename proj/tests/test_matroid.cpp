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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "matroid_tor.hpp"

namespace mt = matroid_tor;
using mt::ElemSet;
using mt::ErrorCode;
using mt::Matroid;

namespace {

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const mt::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

std::int64_t binomial(int n, int k) { return mt::detail::binomial(n, k); }

}  // namespace

TEST(Matroid, UniformHasAllSubsetsAsBases) {
  const Matroid u = Matroid::uniform(3, 5);
  EXPECT_EQ(u.n(), 5);
  EXPECT_EQ(u.rank(), 3);
  EXPECT_EQ(u.num_bases(), 10u);
  EXPECT_TRUE(u.is_loopless());
}

TEST(Matroid, BasesAreSortedLexicographically) {
  const Matroid m = mt::six_element_example();
  EXPECT_EQ(m.num_bases(), 15u);
  EXPECT_TRUE(std::is_sorted(m.bases().begin(), m.bases().end(), mt::lex_less));
  EXPECT_EQ(mt::lex_min_basis(m), (ElemSet{1, 2, 5}));
  EXPECT_EQ(mt::lex_max_basis(m), (ElemSet{4, 5, 6}));
}

TEST(Matroid, RejectsInvalidBasisFamilies) {
  EXPECT_EQ(error_of([] { Matroid::from_bases(3, {}); }), ErrorCode::EmptyBasisFamily);
  EXPECT_EQ(error_of([] { Matroid::from_bases(3, {{1, 2}, {3}}); }), ErrorCode::UnequalCardinality);
  EXPECT_EQ(error_of([] { Matroid::from_bases(3, {{1, 4}}); }), ErrorCode::ElementOutOfRange);
  EXPECT_EQ(error_of([] { Matroid::from_bases(4, {{1, 2}, {3, 4}}); }),
            ErrorCode::ExchangeAxiomViolation);
  EXPECT_EQ(error_of([] { Matroid::uniform(4, 3); }), ErrorCode::InvalidRank);
  EXPECT_EQ(error_of([] { Matroid::uniform(0, 3); }), ErrorCode::InvalidRank);
}

TEST(Matroid, RankAndClosure) {
  const Matroid m = mt::six_element_example();
  EXPECT_EQ(m.rank(ElemSet{1, 2, 3, 4}), 2);
  EXPECT_EQ(m.rank(ElemSet{1, 5, 6}), 2);
  EXPECT_EQ(m.closure(ElemSet{1, 2}), (ElemSet{1, 2, 3, 4}));
  EXPECT_EQ(m.closure(ElemSet{1, 5}), (ElemSet{1, 5, 6}));
  EXPECT_TRUE(m.is_flat(ElemSet{2, 5}));
  EXPECT_FALSE(m.is_flat(ElemSet{1, 5}));
}

TEST(Matroid, DualBasesAreComplements) {
  const Matroid m = mt::six_element_example();
  const Matroid d = m.dual();
  EXPECT_EQ(d.rank(), 3);
  EXPECT_EQ(d.num_bases(), m.num_bases());
  for (ElemSet b : m.bases()) EXPECT_TRUE(d.is_basis(m.ground() - b));
  EXPECT_EQ(d.dual(), m);
}

TEST(Matroid, LoopsAreDetected) {
  const Matroid m = Matroid::from_bases(3, {{1, 2}});
  EXPECT_FALSE(m.is_loopless());
  EXPECT_EQ(error_of([&] { mt::full_fan(m); }), ErrorCode::LoopyMatroid);
}

TEST(Activity, FundamentalCircuitAndPassiveSet) {
  const Matroid u = Matroid::uniform(2, 3);
  EXPECT_EQ(u.fundamental_circuit(ElemSet{1, 2}, 3), (ElemSet{1, 2, 3}));
  EXPECT_EQ(u.externally_passive_set(ElemSet{1, 2}), ElemSet{3});
  EXPECT_EQ(u.externally_passive_set(ElemSet{2, 3}), ElemSet{});
  EXPECT_EQ(mt::activity(u, ElemSet{1, 2}), (mt::Activity{2, 0, 1}));
  EXPECT_EQ(mt::activity(u, ElemSet{1, 3}), (mt::Activity{1, 0, 1}));
  EXPECT_EQ(mt::activity(u, ElemSet{2, 3}), (mt::Activity{0, 1, 0}));
  EXPECT_EQ(error_of([&] { u.fundamental_circuit(ElemSet{1, 2}, 2); }), ErrorCode::ElementInBasis);
  EXPECT_EQ(error_of([&] { u.externally_passive_set(ElemSet{1}); }), ErrorCode::NotABasis);
}

TEST(Activity, UniformPassiveCount) {
  const Matroid u = Matroid::uniform(3, 5);
  for (ElemSet b : u.bases()) EXPECT_EQ(u.externally_passive_set(b).size(), 3 - b.min());
}

TEST(Activity, OnlyTheLexMaxBasisIsFullyActive) {
  for (const auto& [name, m] : mt::corpus(6, 10)) {
    if (!m.is_loopless()) continue;
    for (ElemSet b : m.bases())
      EXPECT_EQ(m.externally_passive_set(b).empty(), b == mt::lex_max_basis(m)) << name;
  }
}

TEST(Activity, CountsAddUp) {
  for (const auto& [name, m] : mt::corpus(6, 10)) {
    if (!m.is_loopless()) continue;
    for (ElemSet b : m.bases()) {
      const mt::Activity a = mt::activity(m, b);
      EXPECT_EQ(a.external_active + a.external_passive, m.n() - m.rank()) << name;
      EXPECT_LE(a.internal_active, m.rank()) << name;
    }
  }
}

TEST(Tutte, U23) {
  EXPECT_EQ(mt::tutte(Matroid::uniform(2, 3)).to_string_descending(), "x^2 + x + y");
}

TEST(Tutte, EvaluationsCountBasesAndNbc) {
  for (const auto& [name, m] : mt::corpus(6, 10)) {
    if (!m.is_loopless()) continue;
    const auto t = mt::tutte(m);
    EXPECT_EQ(t.sum_of_coefficients(), static_cast<std::int64_t>(m.num_bases())) << name;
    std::int64_t at_1_0 = 0;
    for (const auto& [mono, c] : t.terms())
      if (mono.y == 0) at_1_0 += c;
    EXPECT_EQ(at_1_0, static_cast<std::int64_t>(mt::nbc_bases(m).size())) << name;
  }
}

TEST(Tutte, DualitySwapsVariables) {
  for (const auto& [name, m] : mt::corpus(6, 10))
    EXPECT_EQ(mt::tutte(m.dual()), mt::tutte(m).swapped()) << name;
}

TEST(Tutte, InvariantUnderRelabeling) {
  std::mt19937 rng(11);
  for (const auto& [name, m] : mt::corpus(6, 10)) {
    std::vector<int> perm(m.n());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(mt::tutte(mt::relabel(m, perm)), mt::tutte(m)) << name;
  }
}

TEST(Nbc, U23AndU35) {
  EXPECT_EQ(mt::nbc_bases(Matroid::uniform(2, 3)), (std::vector<ElemSet>{{1, 2}, {1, 3}}));
  const auto nbc = mt::nbc_bases(Matroid::uniform(3, 5));
  EXPECT_EQ(nbc.size(), 6u);
  for (ElemSet b : nbc) EXPECT_TRUE(b.contains(1));
}

TEST(Nbc, UniformCount) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= n; ++r)
      EXPECT_EQ(static_cast<std::int64_t>(mt::nbc_bases(Matroid::uniform(r, n)).size()),
                binomial(n - 1, r - 1));
}

TEST(Minors, UniformExamples) {
  const Matroid u35 = Matroid::uniform(3, 5);
  EXPECT_EQ(mt::restriction(u35, ElemSet{1, 2}).matroid, Matroid::uniform(2, 2));
  EXPECT_EQ(mt::restriction(u35, ElemSet{2, 3, 4, 5}).matroid, Matroid::uniform(3, 4));
  EXPECT_EQ(mt::contraction(u35, ElemSet{1, 2}).matroid, Matroid::uniform(1, 3));
  EXPECT_EQ(mt::contraction(Matroid::uniform(2, 3), ElemSet{1}).matroid, Matroid::uniform(1, 2));
  EXPECT_EQ(mt::contraction(u35, ElemSet{}).matroid, u35);
  EXPECT_EQ(Matroid::uniform(2, 3).dual(), Matroid::uniform(1, 3));
}

TEST(Minors, RestrictionAndContraction) {
  const Matroid m = mt::six_element_example();
  const mt::Minor res = mt::restriction(m, ElemSet{1, 2, 3, 4});
  EXPECT_EQ(res.matroid.n(), 4);
  EXPECT_EQ(res.matroid, Matroid::uniform(2, 4));
  const mt::Minor con = mt::contraction(m, ElemSet{1, 5, 6});
  EXPECT_EQ(con.matroid.n(), 3);
  EXPECT_EQ(con.matroid.rank(), 1);
  EXPECT_EQ(con.to_parent(ElemSet{1}), ElemSet{2});
  EXPECT_EQ(error_of([&] { mt::contraction(m, ElemSet{1, 5}); }), ErrorCode::NotAFlat);
}

TEST(Simplification, MergesParallelClasses) {
  const Matroid p = Matroid::from_bases(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_FALSE(mt::is_simple(p));
  EXPECT_TRUE(mt::is_simple(Matroid::uniform(2, 4)));
  const mt::Minor s = mt::simplification(p);
  EXPECT_EQ(s.matroid, Matroid::uniform(2, 3));
}

TEST(ExchangeAxiom, AgreesWithAugmentation) {
  std::mt19937 rng(5);
  const int n = 5;
  for (int trial = 0; trial < 200; ++trial) {
    const int r = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<ElemSet> family;
    mt::for_each_subset_of_size(ElemSet::full(n), r, [&](ElemSet s) {
      if (rng() % 3 != 0) family.push_back(s);
    });
    if (family.empty()) continue;
    bool valid = true;
    for (ElemSet a : family)
      for (ElemSet b : family)
        (a - b).for_each([&](int x) {
          bool found = false;
          (b - a).for_each([&](int y) {
            found = found || std::find(family.begin(), family.end(), a.without(x).with(y)) != family.end();
          });
          valid = valid && found;
        });
    if (valid)
      EXPECT_NO_THROW(Matroid::from_bases(n, family));
    else
      EXPECT_EQ(error_of([&] { Matroid::from_bases(n, family); }), ErrorCode::ExchangeAxiomViolation);
  }
}
