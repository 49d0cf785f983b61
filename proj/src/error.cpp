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

#include "mbg/error.hpp"

namespace mbg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDifferentComponents: return "DifferentComponents";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotAtDistanceTwo: return "NotAtDistanceTwo";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotFree: return "NotFree";
    case ErrorCode::kAdjacentOrbit: return "AdjacentOrbit";
    case ErrorCode::kNotFinished: return "NotFinished";
    case ErrorCode::kNonDivisible: return "NonDivisible";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kLinkNotBipartiteLineGraph: return "LinkNotBipartiteLineGraph";
    case ErrorCode::kNoConsistentLabeling: return "NoConsistentLabeling";
    case ErrorCode::kNotABasisGraph: return "NotABasisGraph";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mbg
