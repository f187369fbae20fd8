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

#include <filesystem>

#include "matroid_tor.hpp"

namespace mt = matroid_tor;
using mt::Matroid;

namespace {

mt::ErrorCode parse_error(const std::string& text) {
  try {
    mt::parse_matroid(text);
  } catch (const mt::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << text;
  return mt::ErrorCode::InvalidParams;
}

}  // namespace

TEST(MatroidJson, RoundTrip) {
  for (const auto& [name, m] : mt::corpus(6, 10))
    EXPECT_EQ(mt::matroid_from_json(mt::matroid_to_json(m)), m) << name;
}

TEST(MatroidJson, ParsesU23) {
  const Matroid m = mt::parse_matroid(R"({"n": 3, "bases": [[1,2],[1,3],[2,3]]})");
  EXPECT_EQ(m, Matroid::uniform(2, 3));
}

TEST(MatroidJson, RejectsMalformedInput) {
  EXPECT_EQ(parse_error("not json"), mt::ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"bases": [[1]]})"), mt::ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"n": "3", "bases": [[1]]})"), mt::ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"n": 3, "bases": [[1, "2"]]})"), mt::ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"n": 3, "bases": [[1, 1]]})"), mt::ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"n": 3, "bases": [[1, 4]]})"), mt::ErrorCode::ElementOutOfRange);
  EXPECT_EQ(parse_error(R"({"n": 0, "bases": []})"), mt::ErrorCode::ElementOutOfRange);
  EXPECT_EQ(parse_error(R"({"n": 3, "bases": []})"), mt::ErrorCode::EmptyBasisFamily);
  EXPECT_EQ(parse_error(R"({"n": 3, "bases": [[1,2],[3]]})"), mt::ErrorCode::UnequalCardinality);
  EXPECT_EQ(parse_error(R"({"n": 4, "bases": [[1,2],[3,4]]})"), mt::ErrorCode::ExchangeAxiomViolation);
}

TEST(MatroidJson, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "matroid_tor_io_test.json";
  const Matroid m = mt::six_element_example();
  mt::write_matroid_file(m, path.string());
  EXPECT_EQ(mt::read_matroid_file(path.string()), m);
  std::filesystem::remove(path);
  try {
    mt::read_matroid_file(path.string());
    FAIL();
  } catch (const mt::Error& e) {
    EXPECT_EQ(e.code(), mt::ErrorCode::ParseError);
  }
}

TEST(SeriesJson, CanonicalOrderAndRoundTrip) {
  const mt::BivariatePoly p = mt::hilb_uniform(3, 2);
  const nlohmann::json j = mt::series_to_json(p);
  EXPECT_EQ(mt::series_from_json(j), p);
  int last_total = -1;
  for (const auto& term : j["terms"]) {
    const int total = term["t"].get<int>() + term["s"].get<int>();
    EXPECT_GE(total, last_total);
    last_total = total;
  }
  EXPECT_EQ(j["terms"][0], (nlohmann::json{{"t", 0}, {"s", 0}, {"c", 1}}));
}

TEST(SeriesJson, RejectsMalformedInput) {
  EXPECT_THROW(mt::series_from_json(nlohmann::json::array()), mt::Error);
  EXPECT_THROW(mt::series_from_json(nlohmann::json{{"terms", {{{"t", 0}}}}}), mt::Error);
}

TEST(PolynomialText, Rendering) {
  EXPECT_EQ(mt::BivariatePoly().to_string(), "0");
  EXPECT_EQ(mt::BivariatePoly::one_plus_x_pow(2).to_string(), "1 + 2*x + x^2");
  EXPECT_EQ(mt::BivariatePoly::monomial(2, 1, -3).to_string(), "-3*x^2*y");
}
