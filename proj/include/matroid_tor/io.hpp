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

#ifndef MATROID_TOR_IO_HPP
#define MATROID_TOR_IO_HPP

// JSON encodings of matroids and bigraded series.
//
//   matroid: {"n": 6, "bases": [[1,2,5], [1,2,6], ...]}
//   series:  {"terms": [{"t": 0, "s": 0, "c": 1}, ...]}

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "matroid_tor/error.hpp"
#include "matroid_tor/matroid.hpp"
#include "matroid_tor/polynomial.hpp"

namespace matroid_tor {

inline nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json bases = nlohmann::json::array();
  for (ElemSet b : m.bases()) bases.push_back(b.elements());
  return {{"n", m.n()}, {"bases", bases}};
}

/// Parses and validates a matroid. Malformed documents raise ParseError;
/// well-formed but invalid basis families raise the matroid error codes.
inline Matroid matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("bases"))
    throw Error(ErrorCode::ParseError, "matroid JSON needs \"n\" and \"bases\"");
  if (!j["n"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"n\" must be an integer");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1 || n > kMaxGroundSet)
    throw Error(ErrorCode::ElementOutOfRange, "n = " + std::to_string(n) + " out of range");
  if (!j["bases"].is_array()) throw Error(ErrorCode::ParseError, "\"bases\" must be an array");
  std::vector<ElemSet> bases;
  for (const auto& b : j["bases"]) {
    if (!b.is_array()) throw Error(ErrorCode::ParseError, "each basis must be an array");
    ElemSet s;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw Error(ErrorCode::ParseError, "elements must be integers");
      const auto v = e.get<std::int64_t>();
      if (v < 1 || v > n)
        throw Error(ErrorCode::ElementOutOfRange, "element " + std::to_string(v) + " outside [1, n]");
      if (s.contains(static_cast<int>(v)))
        throw Error(ErrorCode::ParseError, "repeated element " + std::to_string(v) + " in a basis");
      s.insert(static_cast<int>(v));
    }
    bases.push_back(s);
  }
  return Matroid::from_bases(static_cast<int>(n), std::move(bases));
}

inline Matroid parse_matroid(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return matroid_from_json(j);
}

inline Matroid read_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matroid(buffer.str());
}

inline void write_matroid_file(const Matroid& m, const std::string& path) {
  std::ofstream out(path);
  out << matroid_to_json(m).dump() << '\n';
}

/// Terms in canonical order: total degree, then t, then s.
inline nlohmann::json series_to_json(const BivariatePoly& p) {
  std::vector<std::pair<Monomial2, BivariatePoly::Coeff>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.first.x + a.first.y, a.first.x, a.first.y) <
           std::tuple(b.first.x + b.first.y, b.first.x, b.first.y);
  });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms) arr.push_back({{"t", m.x}, {"s", m.y}, {"c", c}});
  return {{"terms", arr}};
}

inline BivariatePoly series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error(ErrorCode::ParseError, "series JSON needs a \"terms\" array");
  BivariatePoly p;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("t") || !term.contains("s") || !term.contains("c"))
      throw Error(ErrorCode::ParseError, "series term needs t, s and c");
    p.add_term(term["t"].get<int>(), term["s"].get<int>(), term["c"].get<std::int64_t>());
  }
  return p;
}

}  // namespace matroid_tor

#endif  // MATROID_TOR_IO_HPP
