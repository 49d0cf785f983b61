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

#ifndef MBG_TOOLS_REPORT_HPP_
#define MBG_TOOLS_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "mbg/conditions.hpp"
#include "mbg/cover.hpp"
#include "mbg/error.hpp"
#include "mbg/reconstruct.hpp"

namespace mbg::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// SHA-256 of the bytes as lowercase hex.
std::string sha256(const std::string& bytes);

Json to_json(const PatternWitness& w);
Json to_json(const ConditionWitness& w);
Json to_json(const ConditionReport& r);
Json to_json(const AggregateReport& r);
Json to_json(const CoverVerdict& v);
Json to_json(const VerificationReport& r);
Json to_json(const Error& e);

// Inverse of to_json for witnesses and reports (link roots are not
// serialized). Throw kParse on malformed input.
ConditionWitness witness_from_json(const Json& j);
ConditionReport condition_from_json(const Json& j);

}  // namespace mbg::report

#endif  // MBG_TOOLS_REPORT_HPP_
