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
#include <gmpxx.h>

#include <random>

#include "matroid_tor.hpp"

namespace mt = matroid_tor;

namespace {

// Dense Gaussian elimination over the rationals.
std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : rows) {
    std::vector<mpq_class> q;
    for (std::int64_t v : row) q.emplace_back(static_cast<long>(v));
    a.push_back(std::move(q));
  }
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi,
                                                     double density) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::bernoulli_distribution keep(density);
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : m)
    for (auto& v : row)
      if (keep(rng)) v = entry(rng);
  return m;
}

}  // namespace

TEST(ExactRank, SmallCases) {
  EXPECT_EQ(mt::exact_rank(std::vector<std::vector<std::int64_t>>{}), 0u);
  EXPECT_EQ(mt::exact_rank({{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(mt::exact_rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(mt::exact_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3u);
  EXPECT_EQ(mt::exact_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}), 2u);
}

TEST(ExactRank, AgreesWithRationalElimination) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = std::uniform_int_distribution<int>(1, 14)(rng);
    const int cols = std::uniform_int_distribution<int>(1, 14)(rng);
    const auto m = random_matrix(rng, rows, cols, -3, 3, 0.35);
    EXPECT_EQ(mt::exact_rank(m), rational_rank(m)) << "trial " << trial;
  }
}

TEST(ExactRank, RankDeficientProducts) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto a = random_matrix(rng, 12, k, -4, 4, 1.0);
    const auto b = random_matrix(rng, k, 12, -4, 4, 1.0);
    std::vector<std::vector<std::int64_t>> p(12, std::vector<std::int64_t>(12, 0));
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        for (int l = 0; l < k; ++l) p[i][j] += a[i][l] * b[l][j];
    EXPECT_EQ(mt::exact_rank(p), rational_rank(p));
    EXPECT_LE(mt::exact_rank(p), static_cast<std::size_t>(k));
  }
}

TEST(ExactRank, LargeEntriesFallBackToBigIntegers) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 10, 10, -1000000000, 1000000000, 1.0);
    EXPECT_EQ(mt::exact_rank(m), rational_rank(m));
  }
  const std::int64_t big = 3037000499;  // floor(sqrt(2^63 - 1))
  EXPECT_EQ(mt::exact_rank({{big, big - 1, 1}, {big - 1, big, 1}, {1, 1, big}}), 3u);
  EXPECT_EQ(mt::exact_rank({{big, big}, {big, big}}), 1u);
}

TEST(ExactRank, IndependentBlocksAdd) {
  std::vector<mt::SparseVector> v = {{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}, {{5, 1}}, {{6, 1}, {7, -1}}, {}};
  EXPECT_EQ(mt::exact_rank(v), 3u);
}

TEST(ExactRank, IndependentOfVectorOrder) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 9, 9, -2, 2, 0.3);
    const std::size_t r = mt::exact_rank(m);
    std::shuffle(m.begin(), m.end(), rng);
    EXPECT_EQ(mt::exact_rank(m), r);
  }
}
