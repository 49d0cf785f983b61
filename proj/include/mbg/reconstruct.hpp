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

#ifndef MBG_RECONSTRUCT_HPP_
#define MBG_RECONSTRUCT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mbg/conditions.hpp"
#include "mbg/error.hpp"
#include "mbg/graph.hpp"
#include "mbg/matroid.hpp"

namespace mbg {

// Equicardinal vertex labels over the universe {0, ..., universe - 1}.
struct Labeling {
  int universe = 0;
  std::vector<Mask> label;
  std::vector<bool> assigned;

  bool complete() const;
};

// Labels v and its neighbors from the bipartite root of link(v): universe =
// root vertices, S_v = B_0, and a neighbor with root edge b_0 b gets
// S_v - b_0 + b. Bit c of `flips` swaps the sides of root component c
// (components ordered by least root vertex). Throws
// kLinkNotBipartiteLineGraph and kTooLarge for a universe beyond 64.
Labeling root_labels(const Graph& g, Vertex v, uint32_t flips = 0);

// Number of connected components of the root of link(v).
int root_components(const Graph& g, Vertex v);

inline constexpr int64_t kDefaultPropagationBudget = 100000;

// Extends `partial` in BFS order from v by constraint filtering with
// backtracking, then re-verifies the whole labeling. Throws
// kNoConsistentLabeling (witness: the earliest vertex left without a
// candidate) or kBudgetExceeded after `budget` dead ends.
Labeling propagate_labels(const Graph& g, Vertex v, Labeling partial,
                          int64_t budget = kDefaultPropagationBudget);

// Global check: distinct, equicardinal, and u ~ w iff |S_u ^ S_w| = 2.
bool is_valid_labeling(const Graph& g, const Labeling& labeling);

struct ReconstructOptions {
  Vertex basepoint = 0;
  int64_t budget = kDefaultPropagationBudget;
  CheckOptions check;
};

struct Reconstruction {
  SetSystem matroid;
  Labeling labeling;
  uint32_t flips = 0;
};

// Failure of reconstruct_matroid: `stage` is one of precheck, root,
// propagate, assemble, verify, isomorphism.
class ReconstructionError : public Error {
 public:
  ReconstructionError(std::string stage, const std::string& detail, std::vector<int64_t> witness = {});
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Throws ReconstructionError (code kNotABasisGraph).
Reconstruction reconstruct_matroid(const Graph& g, const ReconstructOptions& options = {});

}  // namespace mbg

#endif  // MBG_RECONSTRUCT_HPP_
