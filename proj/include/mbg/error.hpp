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

#ifndef MBG_ERROR_HPP_
#define MBG_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbg {

enum class ErrorCode {
  kSelfLoop,
  kVertexOutOfRange,
  kDifferentComponents,
  kTooLarge,
  kNotAtDistanceTwo,
  kBudgetExceeded,
  kDisconnected,
  kNotFree,
  kAdjacentOrbit,
  kNotFinished,
  kNonDivisible,
  kHypothesisViolation,
  kLinkNotBipartiteLineGraph,
  kNoConsistentLabeling,
  kNotABasisGraph,
  kParse,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every contract violation in the library surfaces as this exception.
// `witness` carries the offending vertex ids / elements when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<int64_t> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<int64_t>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int64_t> witness_;
};

}  // namespace mbg

#endif  // MBG_ERROR_HPP_
