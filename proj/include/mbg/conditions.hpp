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

#ifndef MBG_CONDITIONS_HPP_
#define MBG_CONDITIONS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbg/graph.hpp"
#include "mbg/patterns.hpp"

namespace mbg {

enum class ConditionId {
  kIC,
  kPC,
  kLPC,
  kTC,
  kSPC,
  kLTC,
  kLC,
  kLCAll,
  kGenLink,
  kIC4,
  kNoForbidden,
};

std::string_view condition_name(ConditionId id);

struct ConditionWitness {
  std::vector<std::pair<std::string, Vertex>> roles;
  std::optional<PatternWitness> pattern;  // ids of the checked graph
  std::string reason;

  std::optional<Vertex> role(std::string_view name) const;
};

struct ConditionReport {
  ConditionId id = ConditionId::kIC;
  std::optional<Vertex> basepoint;
  bool pass = true;
  bool exhaustive = true;
  uint64_t seed = 0;
  std::vector<ConditionWitness> witnesses;
  std::vector<std::pair<std::string, int64_t>> stats;
  // Filled by the link checks for every vertex whose link passed.
  std::map<Vertex, RootGraph> link_roots;

  int64_t stat(std::string_view name) const;
};

struct CheckOptions {
  // Graphs with more vertices than this are sampled instead of scanned.
  int sample_threshold = 2000;
  bool force_sampling = false;
  // Instances drawn by pair/square quantified checks (IC, IC4, PC, LPC).
  int64_t pair_samples = 1000;
  // Vertices drawn by vertex-local checks (LTC, links, pattern anchors).
  int64_t vertex_samples = 64;
  uint64_t seed = 0;
  // Witnesses kept per report; violations beyond this are only counted.
  size_t max_witnesses = 16;
};

ConditionReport check_interval_condition(const Graph& g, const CheckOptions& options = {});
// Every basepoint when `basepoint` is empty. Throws kDisconnected.
ConditionReport check_positioning(const Graph& g, std::optional<Vertex> basepoint = std::nullopt,
                                  const CheckOptions& options = {});
ConditionReport check_local_positioning(const Graph& g, const CheckOptions& options = {});
// Both throw kDisconnected.
ConditionReport check_triangle_condition(const Graph& g, Vertex basepoint);
ConditionReport check_square_pyramid(const Graph& g, Vertex basepoint);
ConditionReport check_local_triangle(const Graph& g, const CheckOptions& options = {});
// A single vertex (id LC(v)) or every vertex (id LC-all).
ConditionReport check_link_condition(const Graph& g, std::optional<Vertex> v = std::nullopt,
                                     const CheckOptions& options = {});
ConditionReport check_generalized_link(const Graph& g, const CheckOptions& options = {});
ConditionReport check_ic4(const Graph& g, const CheckOptions& options = {});
// Propeller, half open book, odd wheel, K_{2,3} and W_4^-.
ConditionReport check_forbidden_patterns(const Graph& g, const CheckOptions& options = {});

// True iff `w` is a genuine violation of the condition `report` was made for.
bool revalidate(const Graph& g, const ConditionReport& report, const ConditionWitness& w);

enum class MaurerMode { kMatroid, kEvenDelta };

std::string_view maurer_mode_name(MaurerMode mode);

struct AggregateReport {
  MaurerMode mode = MaurerMode::kMatroid;
  bool pass = true;
  int min_degree = 0;
  std::vector<ConditionReport> reports;
};

// Matroid: IC, LPC and the pattern scan. EvenDelta: IC4, GenLink, LPC and the
// pattern scan. Throws kDisconnected.
AggregateReport maurer_check(const Graph& g, MaurerMode mode, const CheckOptions& options = {});

}  // namespace mbg

#endif  // MBG_CONDITIONS_HPP_
