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

#ifndef MBG_COVER_HPP_
#define MBG_COVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbg/complex.hpp"
#include "mbg/graph.hpp"
#include "mbg/matroid.hpp"

namespace mbg {

inline constexpr int64_t kCoverBudgetFactor = 64;

// Universal cover grown ball by ball around the lift ṽ = 0 of the basepoint.
// Cover ids are contiguous per level: S̃_i = [level_start[i], level_start[i+1]).
struct CoverState {
  Graph base;
  Vertex basepoint = 0;
  Graph cover;
  std::vector<Vertex> f;  // cover vertex -> base vertex
  std::vector<int> level_of;
  std::vector<int64_t> level_start;
  bool finished = false;

  int levels() const { return static_cast<int>(level_start.size()) - 1; }
};

struct CoverOptions {
  // Maximum number of cover vertices; kCoverBudgetFactor * |V| when empty.
  std::optional<int64_t> budget;
  // Verify the star of every completed level and throw kHypothesisViolation
  // on the first vertex whose star does not map isomorphically.
  bool checked = false;
};

// Throws kDisconnected, kBudgetExceeded, kHypothesisViolation (checked mode)
// and kInvalidArgument for a budget below |V|.
CoverState build_universal_cover(const TriangleSquareComplex& x, Vertex basepoint,
                                 const CoverOptions& options = {});

// |cover| / |base|. Throws kNotFinished or kNonDivisible.
int64_t sheets(const CoverState& state);

bool is_simply_connected(const TriangleSquareComplex& x, const CoverOptions& options = {});

struct CoverVerdict {
  int64_t sheets = 0;
  bool simply_connected = false;
  int64_t vertices = 0;
  int64_t edges = 0;
  int64_t triangles = 0;
  int64_t squares = 0;
  std::vector<int64_t> level_sizes;  // |S̃_i|
};

CoverVerdict summarize(const CoverState& state);

struct PropertyCheck {
  std::string name;
  bool pass = true;
  int64_t checked = 0;
  std::string failure;         // first failure
  std::vector<Vertex> witness;  // cover ids of the first failure
};

struct VerificationReport {
  bool pass = true;
  std::vector<PropertyCheck> properties;

  const PropertyCheck* property(const std::string& name) const;
};

// Properties P (ball structure), Q (TC and SPC at ṽ), R (stars of inner
// vertices), S (squares map to squares), T (stars of boundary vertices),
// U (PC at ṽ on every cover square), edge (f maps edges to edges) and
// covering (stars everywhere).
VerificationReport verify_cover(const CoverState& state);

struct QuotientCheckOptions {
  // Base vertices checked; all when zero.
  int64_t samples = 0;
  uint64_t seed = 0;
};

// Star-by-star check that the projection is a covering of complexes.
VerificationReport verify_quotient_covering(const Graph& base, const QuotientResult& q,
                                            const QuotientCheckOptions& options = {});

}  // namespace mbg

#endif  // MBG_COVER_HPP_
