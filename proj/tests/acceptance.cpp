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


// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "matroid_tor.hpp"

namespace mt = matroid_tor;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome from_report(const mt::SuiteReport& rep) {
  Outcome o{rep.passed(), std::to_string(rep.checks) + " checks"};
  for (std::size_t k = 0; k < rep.failures.size() && k < 5; ++k) o.detail += "\n    " + rep.failures[k];
  return o;
}

Outcome six_element_full_fan() {
  const auto series =
      mt::tor_table(mt::full_fan(mt::six_element_example()), mt::RingChoice::OverSMcirc, {}, 1);
  const std::string want = "1 + 9*y + y^2 + 28*x*y + 7*x*y^2 + 24*x^2*y + 13*x^2*y^2 + 7*x^3*y + 6*x^3*y^2";
  return {series.to_string() == want, series.to_string()};
}

Outcome graded_dimensions_u35() {
  const mt::BergmanFan fan = mt::full_fan(mt::Matroid::uniform(3, 5));
  const auto d1 = mt::graded_dimension(fan, 1), d2 = mt::graded_dimension(fan, 2);
  return {d1 == 15 && d2 == 35, "s=1: " + std::to_string(d1) + ", s=2: " + std::to_string(d2)};
}

Outcome uniform_recursion() {
  mt::SuiteReport total{"uniform"};
  for (auto [r, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}}) {
    mt::VerifyOptions opt;
    opt.only = mt::Matroid::uniform(r, r + k);
    total.merge(mt::verify_uniform(opt));
  }
  return from_report(total);
}

Outcome flip_bookkeeping() {
  mt::SuiteReport total{"flips"};
  mt::VerifyOptions opt;
  opt.only = mt::Matroid::uniform(3, 5);
  total.merge(mt::verify_flips(opt));
  opt.only = mt::six_element_example();
  total.merge(mt::verify_flips(opt));
  return from_report(total);
}

mt::VerifyOptions corpus_options(int max_n) {
  mt::VerifyOptions opt;
  opt.max_n = max_n;
  opt.jobs = mt::resolve_jobs(0);
  return opt;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "six-element matroid, full fan over the difference ring", six_element_full_fan},
      {2, "graded dimensions of the U(3,5) Bergman fan", graded_dimensions_u35},
      {3, "Koszul over S_M = ep formula = Tutte specialization, corpus n <= 7",
       [] { return from_report(mt::verify_tutte(corpus_options(7))); }},
      {4, "Koszul over S° = square-free subcomplex = closed form, corpus n <= 7",
       [] { return from_report(mt::verify_smo(corpus_options(7))); }},
      {5, "Hochster's formula vs Koszul over S_M, corpus n <= 6",
       [] { return from_report(mt::verify_hochster(corpus_options(6))); }},
      {6, "vanishing and top degree |NBC| on full fans, corpus n <= 6",
       [] { return from_report(mt::verify_top(corpus_options(6))); }},
      {7, "uniform recursion vs brute force", uniform_recursion},
      {8, "flip bookkeeping on U(3,5) and Chow rows on the six-element matroid", flip_bookkeeping},
      {9, "structural property suites, corpus n <= 6",
       [] { return from_report(mt::verify_structure(corpus_options(6))); }},
      {10, "change-of-rings identity, corpus n <= 7",
       [] { return from_report(mt::verify_change_of_rings(corpus_options(7))); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << o.detail
              << "] (" << secs << " s)" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
