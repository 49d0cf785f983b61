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

#include "report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace mbg::report {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kParse, "report: " + what); }

template <class Enum, class NameFn>
Enum enum_from_name(const std::string& name, int count, NameFn fn) {
  for (int i = 0; i < count; ++i) {
    if (fn(static_cast<Enum>(i)) == name) return static_cast<Enum>(i);
  }
  malformed("unknown name '" + name + "'");
}

}  // namespace

std::string sha256(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "sha256 failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

Json to_json(const PatternWitness& w) {
  return Json{{"kind", std::string(pattern_name(w.kind))}, {"vertices", w.vertices}};
}

Json to_json(const ConditionWitness& w) {
  Json roles = Json::object();
  for (const auto& [name, v] : w.roles) roles[name] = v;
  Json j{{"roles", roles}};
  if (w.pattern) j["pattern"] = to_json(*w.pattern);
  j["reason"] = w.reason;
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j{{"condition", std::string(condition_name(r.id))}};
  j["basepoint"] = r.basepoint ? Json(*r.basepoint) : Json(nullptr);
  j["pass"] = r.pass;
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  Json stats = Json::object();
  for (const auto& [name, v] : r.stats) stats[name] = v;
  j["stats"] = stats;
  return j;
}

Json to_json(const AggregateReport& r) {
  Json j{{"mode", std::string(maurer_mode_name(r.mode))}, {"pass", r.pass}, {"min_degree", r.min_degree}};
  j["conditions"] = Json::array();
  for (const auto& c : r.reports) j["conditions"].push_back(to_json(c));
  return j;
}

Json to_json(const CoverVerdict& v) {
  return Json{{"sheets", v.sheets},       {"simply_connected", v.simply_connected},
              {"vertices", v.vertices},   {"edges", v.edges},
              {"triangles", v.triangles}, {"squares", v.squares},
              {"level_sizes", v.level_sizes}};
}

Json to_json(const VerificationReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    props.push_back(Json{{"name", p.name},
                         {"pass", p.pass},
                         {"checked", p.checked},
                         {"failure", p.failure},
                         {"witness", p.witness}});
  }
  return Json{{"pass", r.pass}, {"properties", props}};
}

Json to_json(const Error& e) {
  Json j{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"witness", e.witness()}};
  if (const auto* re = dynamic_cast<const ReconstructionError*>(&e)) j["stage"] = re->stage();
  return j;
}

ConditionWitness witness_from_json(const Json& j) {
  try {
    ConditionWitness w;
    for (const auto& [name, v] : j.at("roles").items()) w.roles.emplace_back(name, v.get<Vertex>());
    if (j.contains("pattern")) {
      const auto& p = j.at("pattern");
      w.pattern = PatternWitness{
          enum_from_name<PatternKind>(p.at("kind").get<std::string>(), 8, pattern_name),
          p.at("vertices").get<std::vector<Vertex>>()};
    }
    w.reason = j.value("reason", "");
    return w;
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

ConditionReport condition_from_json(const Json& j) {
  try {
    ConditionReport r;
    r.id = enum_from_name<ConditionId>(j.at("condition").get<std::string>(), 11, condition_name);
    if (!j.at("basepoint").is_null()) r.basepoint = j.at("basepoint").get<Vertex>();
    r.pass = j.at("pass").get<bool>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.seed = j.at("seed").get<uint64_t>();
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w));
    for (const auto& [name, v] : j.at("stats").items()) r.stats.emplace_back(name, v.get<int64_t>());
    return r;
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace mbg::report
