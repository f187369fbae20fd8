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

#ifndef MATROID_TOR_CORPUS_HPP
#define MATROID_TOR_CORPUS_HPP

// Standard test matroids: uniform matroids, a rank 3 matroid on six
// elements with fifteen bases, its dual, and seeded random matroids
// represented by small integer matrices.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matroid_tor/exact_rank.hpp"
#include "matroid_tor/matroid.hpp"

namespace matroid_tor {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

/// Rank 3 on [6] with 15 bases: every 3-subset except those inside 1234
/// and the set 156.
inline Matroid six_element_example() {
  std::vector<ElemSet> bases;
  for (const char* s : {"125", "126", "135", "136", "145", "146", "235", "236", "245", "246", "256",
                        "345", "346", "356", "456"}) {
    ElemSet b;
    for (const char* p = s; *p; ++p) b.insert(*p - '0');
    bases.push_back(b);
  }
  return Matroid::from_bases(6, std::move(bases));
}

/// Column matroid of an r x n integer matrix. Columns must be nonzero and
/// the matrix of full row rank.
inline Matroid column_matroid(const std::vector<std::vector<std::int64_t>>& columns, int r) {
  const int n = static_cast<int>(columns.size());
  std::vector<ElemSet> bases;
  for_each_subset_of_size(ElemSet::full(n), r, [&](ElemSet s) {
    std::vector<std::vector<std::int64_t>> chosen;
    s.for_each([&](int e) { chosen.push_back(columns[e - 1]); });
    if (exact_rank(chosen) == static_cast<std::size_t>(r)) bases.push_back(s);
  });
  return Matroid::from_bases(n, std::move(bases));
}

/// Seeded loopless random matroids with 2 <= n <= max_n and 1 <= r < n.
inline std::vector<NamedMatroid> random_matroids(int count, int max_n, std::uint32_t seed = 20260101u) {
  std::mt19937 rng(seed);
  std::vector<NamedMatroid> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(3, max_n)(rng);
    const int r = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::uniform_int_distribution<int> entry(-1, 1);
    std::vector<std::vector<std::int64_t>> columns(n, std::vector<std::int64_t>(r));
    for (auto& col : columns) {
      do {
        for (auto& v : col) v = entry(rng);
      } while (std::all_of(col.begin(), col.end(), [](std::int64_t v) { return v == 0; }));
    }
    if (exact_rank(columns) != static_cast<std::size_t>(r)) continue;
    out.push_back({"random" + std::to_string(out.size()) + "_r" + std::to_string(r) + "_n" + std::to_string(n),
                   column_matroid(columns, r)});
  }
  return out;
}

/// Uniform matroids with n <= max_n, the six-element example and its dual,
/// and `random_count` random matroids on at most min(max_n, 6) elements.
inline std::vector<NamedMatroid> corpus(int max_n = 7, int random_count = 20) {
  std::vector<NamedMatroid> out;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 1; r <= n; ++r)
      out.push_back({"U" + std::to_string(r) + "," + std::to_string(n), Matroid::uniform(r, n)});
  if (max_n >= 6) {
    const Matroid m6 = six_element_example();
    out.push_back({"M6", m6});
    out.push_back({"M6*", m6.dual()});
  }
  if (max_n >= 3)
    for (auto& nm : random_matroids(random_count, std::min(max_n, 6))) out.push_back(std::move(nm));
  return out;
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_CORPUS_HPP
