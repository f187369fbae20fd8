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

#ifndef MATROID_TOR_POLYNOMIAL_HPP
#define MATROID_TOR_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace matroid_tor {

/// Exponent pair (i, j) of x^i y^j. For Hilbert series of Tor algebras i is
/// the Tor degree t and j the Stanley-Reisner degree s.
struct Monomial2 {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;
};

/// Finitely supported integer polynomial in x and y. Zero coefficients are
/// never stored.
class BivariatePoly {
 public:
  using Coeff = std::int64_t;

  BivariatePoly() = default;
  /// Constant polynomial.
  explicit BivariatePoly(Coeff c) {
    if (c != 0) terms_[{0, 0}] = c;
  }

  static BivariatePoly monomial(int i, int j, Coeff c = 1) {
    BivariatePoly p;
    p.add_term(i, j, c);
    return p;
  }
  static BivariatePoly x() { return monomial(1, 0); }
  static BivariatePoly y() { return monomial(0, 1); }

  /// (1 + x)^e
  static BivariatePoly one_plus_x_pow(int e) {
    BivariatePoly p;
    Coeff binom = 1;
    for (int i = 0; i <= e; ++i) {
      p.add_term(i, 0, binom);
      binom = binom * (e - i) / (i + 1);
    }
    return p;
  }

  /// y^lo + y^(lo+1) + ... + y^hi, zero when hi < lo.
  static BivariatePoly y_range(int lo, int hi) {
    BivariatePoly p;
    for (int j = lo; j <= hi; ++j) p.add_term(0, j, 1);
    return p;
  }

  void add_term(int i, int j, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Monomial2{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coefficient(int i, int j) const {
    auto it = terms_.find(Monomial2{i, j});
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<Monomial2, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff sum_of_coefficients() const {
    Coeff s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  bool all_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.second > 0; });
  }

  int max_x_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }
  int max_y_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
  }

  /// Keeps only the terms with x-degree t.
  BivariatePoly row(int t) const {
    BivariatePoly p;
    for (const auto& [m, c] : terms_)
      if (m.x == t) p.add_term(m.x, m.y, c);
    return p;
  }

  /// Swaps the roles of x and y.
  BivariatePoly swapped() const {
    BivariatePoly p;
    for (const auto& [m, c] : terms_) p.add_term(m.y, m.x, c);
    return p;
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
    return *this;
  }
  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, -c);
    return *this;
  }
  BivariatePoly& operator*=(Coeff k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(BivariatePoly a, Coeff k) { return a *= k; }
  friend BivariatePoly operator*(Coeff k, BivariatePoly a) { return a *= k; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) p.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
    return p;
  }
  BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

  BivariatePoly pow(int e) const {
    BivariatePoly result(1);
    for (int k = 0; k < e; ++k) result *= *this;
    return result;
  }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// Terms ordered by (total degree, x-degree, y-degree) ascending, e.g.
  /// "1 + 9*y + y^2 + 28*x*y". This is the canonical rendering for Hilbert
  /// series of Tor algebras.
  std::string to_string() const { return render(false); }

  /// Terms ordered by total degree, then x-degree, both descending, e.g.
  /// "x^2 + x + y". Used for Tutte polynomials.
  std::string to_string_descending() const { return render(true); }

 private:
  static std::string power(char var, int e) {
    if (e == 0) return "";
    std::string s(1, var);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  }

  std::string render(bool descending) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial2, Coeff>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
      auto key = [](const Monomial2& m) { return std::tuple(m.x + m.y, m.x, m.y); };
      return descending ? key(b.first) < key(a.first) : key(a.first) < key(b.first);
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      Coeff mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::vector<std::string> factors;
      if (mag != 1 || (m.x == 0 && m.y == 0)) factors.push_back(std::to_string(mag));
      if (m.x > 0) factors.push_back(power('x', m.x));
      if (m.y > 0) factors.push_back(power('y', m.y));
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k > 0) out += '*';
        out += factors[k];
      }
    }
    return out;
  }

  std::map<Monomial2, Coeff> terms_;
};

/// Tutte polynomial: x^i y^j coefficients, all nonnegative, summing to the
/// number of bases.
using TuttePolynomial = BivariatePoly;

/// Hilbert series of a bigraded vector space: coefficient of x^t y^s is the
/// dimension of the (t, s) piece.
using BigradedSeries = BivariatePoly;

}  // namespace matroid_tor

#endif  // MATROID_TOR_POLYNOMIAL_HPP
