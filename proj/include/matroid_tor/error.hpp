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

#ifndef MATROID_TOR_ERROR_HPP
#define MATROID_TOR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroid_tor {

enum class ErrorCode {
  EmptyBasisFamily,
  UnequalCardinality,
  ExchangeAxiomViolation,
  ElementOutOfRange,
  InvalidRank,
  EmptyGroundSet,
  NotAFlat,
  NotABasis,
  ElementInBasis,
  LoopyMatroid,
  UnknownFlat,
  InvalidOrderFilter,
  UnknownRay,
  InvalidFlip,
  WrongRank,
  InvalidParams,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyBasisFamily: return "EmptyBasisFamily";
    case ErrorCode::UnequalCardinality: return "UnequalCardinality";
    case ErrorCode::ExchangeAxiomViolation: return "ExchangeAxiomViolation";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::EmptyGroundSet: return "EmptyGroundSet";
    case ErrorCode::NotAFlat: return "NotAFlat";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::ElementInBasis: return "ElementInBasis";
    case ErrorCode::LoopyMatroid: return "LoopyMatroid";
    case ErrorCode::UnknownFlat: return "UnknownFlat";
    case ErrorCode::InvalidOrderFilter: return "InvalidOrderFilter";
    case ErrorCode::UnknownRay: return "UnknownRay";
    case ErrorCode::InvalidFlip: return "InvalidFlip";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matroid_tor

#endif  // MATROID_TOR_ERROR_HPP
