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

#include "matroid_tor.hpp"

namespace mt = matroid_tor;
using mt::BivariatePoly;
using mt::ElemSet;
using mt::Matroid;
using mt::RingChoice;

namespace {

// Columns of `second` composed with `first` (apply first, then second).
bool composition_vanishes(const mt::KoszulPiece& first, const mt::KoszulPiece& second) {
  for (const auto& col : first.columns)
    if (!second.apply(col).empty()) return false;
  return true;
}

}  // namespace

TEST(StructureForms, U23EmptyOverSM) {
  const mt::BergmanFan fan = mt::empty_filter_fan(Matroid::uniform(2, 3));
  const mt::LinearFormSet forms = mt::structure_forms(fan, RingChoice::OverSM);
  ASSERT_EQ(forms.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(forms.forms[i], (mt::LinearForm{{i, 1}}));
}

TEST(StructureForms, U23FullOverDifferenceRing) {
  const mt::BergmanFan fan = mt::full_fan(Matroid::uniform(2, 3));
  const mt::LinearFormSet forms = mt::structure_forms(fan, RingChoice::OverSMcirc);
  ASSERT_EQ(forms.size(), 2u);
  EXPECT_EQ(forms.forms[0], (mt::LinearForm{{0, 1}, {2, -1}}));
  EXPECT_EQ(forms.forms[1], (mt::LinearForm{{1, 1}, {2, -1}}));
}

TEST(StructureForms, RankOneFullFanIsTrivial) {
  const mt::BergmanFan fan = mt::full_fan(Matroid::uniform(1, 2));
  EXPECT_EQ(fan.num_rays(), 0u);
  const mt::LinearFormSet forms = mt::structure_forms(fan, RingChoice::OverSMcirc);
  ASSERT_EQ(forms.size(), 1u);
  EXPECT_TRUE(forms.forms[0].empty());
}

TEST(KoszulMatrix, U23EmptyDegreeZero) {
  const mt::BergmanFan fan = mt::empty_filter_fan(Matroid::uniform(2, 3));
  const auto piece = mt::koszul_matrix(fan, mt::structure_forms(fan, RingChoice::OverSM), 1, 0);
  EXPECT_EQ(piece.rows, 3u);
  EXPECT_EQ(piece.cols, 3u);
  EXPECT_EQ(piece.dense(), (std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(KoszulMatrix, TZeroHasNoTarget) {
  const mt::BergmanFan fan = mt::full_fan(Matroid::uniform(3, 4));
  const auto piece = mt::koszul_matrix(fan, mt::structure_forms(fan, RingChoice::OverSMcirc), 0, 2);
  EXPECT_EQ(piece.rows, 0u);
  EXPECT_EQ(piece.cols, static_cast<std::size_t>(mt::graded_dimension(fan, 2)));
  for (const auto& col : piece.columns) EXPECT_TRUE(col.empty());
}

TEST(KoszulMatrix, DifferentialSquaresToZero) {
  for (const auto& [name, m] : mt::corpus(5, 6)) {
    if (!m.is_loopless()) continue;
    for (const mt::BergmanFan& fan : {mt::empty_filter_fan(m), mt::full_fan(m)})
      for (RingChoice ring : {RingChoice::OverSM, RingChoice::OverSMcirc}) {
        const mt::LinearFormSet forms = mt::structure_forms(fan, ring);
        const int top = static_cast<int>(forms.size());
        for (int t = 2; t <= top; ++t)
          for (int s = 0; s <= m.rank() - 1; ++s)
            EXPECT_TRUE(composition_vanishes(mt::koszul_matrix(fan, forms, t, s),
                                             mt::koszul_matrix(fan, forms, t - 1, s + 1)))
                << name << " t=" << t << " s=" << s;
      }
  }
}

TEST(TorDimension, Examples) {
  const mt::BergmanFan u12 = mt::full_fan(Matroid::uniform(1, 2));
  EXPECT_EQ(mt::tor_dimension(u12, mt::structure_forms(u12, RingChoice::OverSMcirc), 1, 0), 1);
  const mt::BergmanFan u23 = mt::full_fan(Matroid::uniform(2, 3));
  EXPECT_EQ(mt::tor_dimension(u23, mt::structure_forms(u23, RingChoice::OverSMcirc), 1, 1), 2);
  const mt::BergmanFan u23e = mt::empty_filter_fan(Matroid::uniform(2, 3));
  EXPECT_EQ(mt::tor_dimension(u23e, mt::structure_forms(u23e, RingChoice::OverSM), 2, 1), 2);
}

TEST(TorTable, RankOne) {
  EXPECT_EQ(mt::tor_table(mt::full_fan(Matroid::uniform(1, 2)), RingChoice::OverSMcirc).to_string(), "1 + x");
  EXPECT_EQ(mt::tor_table(mt::full_fan(Matroid::uniform(1, 3)), RingChoice::OverSMcirc).to_string(),
            "1 + 2*x + x^2");
}

TEST(TorTable, SixElementFullFan) {
  EXPECT_EQ(mt::tor_table(mt::full_fan(mt::six_element_example()), RingChoice::OverSMcirc).to_string(),
            "1 + 9*y + y^2 + 28*x*y + 7*x*y^2 + 24*x^2*y + 13*x^2*y^2 + 7*x^3*y + 6*x^3*y^2");
}

TEST(TorTable, U35) {
  const Matroid u35 = Matroid::uniform(3, 5);
  EXPECT_EQ(mt::tor_table(mt::full_fan(u35), RingChoice::OverSMcirc).to_string(),
            "1 + 11*y + y^2 + 20*x*y + 9*x*y^2 + 10*x^2*y + 6*x^2*y^2");
  EXPECT_EQ(mt::tor_table(mt::empty_filter_fan(u35), RingChoice::OverSM).to_string(),
            "1 + 10*x*y^2 + 15*x^2*y^2 + 6*x^3*y^2");
  EXPECT_EQ(mt::tor_table(mt::empty_filter_fan(u35), RingChoice::OverSMcirc).to_string(),
            "1 + y + y^2 + 9*x*y^2 + 6*x^2*y^2");
}

TEST(TorTable, IndependentOfJobCount) {
  const mt::BergmanFan fan = mt::full_fan(mt::six_element_example().dual());
  const BivariatePoly one = mt::tor_table(fan, RingChoice::OverSMcirc, {}, 1);
  EXPECT_EQ(mt::tor_table(fan, RingChoice::OverSMcirc, {}, 4), one);
}

TEST(TorTable, WindowTruncates) {
  const mt::BergmanFan fan = mt::full_fan(Matroid::uniform(3, 5));
  const BivariatePoly full = mt::tor_table(fan, RingChoice::OverSMcirc);
  const BivariatePoly part = mt::tor_table(fan, RingChoice::OverSMcirc, {1, 1});
  for (const auto& [mono, c] : part.terms()) {
    EXPECT_LE(mono.x, 1);
    EXPECT_LE(mono.y, 1);
    EXPECT_EQ(full.coefficient(mono.x, mono.y), c);
  }
  EXPECT_EQ(part.coefficient(1, 1), 20);
}

TEST(TorTable, TorZeroIsTheQuotientRing) {
  for (const auto& [name, m] : mt::corpus(5, 6)) {
    if (!m.is_loopless()) continue;
    const BivariatePoly sm = mt::tor_table(mt::empty_filter_fan(m), RingChoice::OverSM);
    EXPECT_EQ(sm.row(0), BivariatePoly(1)) << name;
    const BivariatePoly smo = mt::tor_table(mt::empty_filter_fan(m), RingChoice::OverSMcirc);
    EXPECT_EQ(smo.row(0), BivariatePoly::y_range(0, m.rank() - 1)) << name;
  }
}

TEST(TorTable, ChangeOfRings) {
  for (const auto& [name, m] : mt::corpus(6, 10)) {
    if (!m.is_loopless()) continue;
    const int r = m.rank();
    const BivariatePoly sm = mt::tor_table(mt::empty_filter_fan(m), RingChoice::OverSM);
    const BivariatePoly smo = mt::tor_table(mt::empty_filter_fan(m), RingChoice::OverSMcirc);
    const BivariatePoly lhs = (BivariatePoly(1) + BivariatePoly::x()) * smo;
    const BivariatePoly rhs =
        BivariatePoly::y_range(1, r - 1) + BivariatePoly::x() * BivariatePoly::y_range(0, r - 2) + sm;
    EXPECT_EQ(lhs, rhs) << name;
  }
}
