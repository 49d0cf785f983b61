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

#ifndef MBG_MATROID_HPP_
#define MBG_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbg/graph.hpp"

namespace mbg {

// Subsets of the ground set {0, ..., m-1} with m <= 64.
using Mask = uint64_t;
inline constexpr int kMaxGroundSize = 64;
inline constexpr int64_t kDefaultBasisBudget = 2'000'000;
inline constexpr int kDefaultGraphicEdgeBudget = 20;

int popcount(Mask m);
std::vector<int> elements_of(Mask m);
Mask mask_of(std::span<const int> elements);

// Ground set size plus a nonempty list of pairwise distinct subsets. Serves
// as a matroid or even delta-matroid candidate; axioms are checked
// separately.
class SetSystem {
 public:
  // Throws kInvalidArgument on an empty family, duplicates, out-of-range
  // elements or m > 64.
  SetSystem(int ground_size, std::vector<Mask> bases);

  int ground_size() const { return ground_size_; }
  const std::vector<Mask>& bases() const { return bases_; }
  int size() const { return static_cast<int>(bases_.size()); }
  bool contains(Mask m) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int ground_size_;
  std::vector<Mask> bases_;
  std::vector<Mask> sorted_;
};

// (A, B, a) with no admissible partner b.
struct ExchangeWitness {
  Mask a_set;
  Mask b_set;
  int element;
};

struct AxiomVerdict {
  bool holds = false;
  std::string reason;
  std::optional<ExchangeWitness> witness;
};

AxiomVerdict verify_matroid(const SetSystem& ss);
AxiomVerdict verify_even_delta_matroid(const SetSystem& ss);

struct BasisGraphResult {
  Graph graph;
  // Vertex i is the i-th basis in ascending mask order.
  std::vector<Mask> vertex_to_basis;
};

BasisGraphResult basis_graph(const SetSystem& ss);

SetSystem uniform_matroid(int m, int k, int64_t budget = kDefaultBasisBudget);
inline SetSystem complete_matroid(int n, int64_t budget = kDefaultBasisBudget) {
  return uniform_matroid(2 * n, n, budget);
}
// All even-cardinality subsets of an m-set: an even delta-matroid.
SetSystem even_subsets(int m, int64_t budget = kDefaultBasisBudget);

// Bases are the edge-index sets of spanning trees of a connected multigraph
// (loops allowed, never in a tree). Throws kDisconnected / kBudgetExceeded.
SetSystem graphic_matroid(int vertex_count, std::span<const Edge> edges,
                          int edge_budget = kDefaultGraphicEdgeBudget);

// A cyclic group acting on a graph, given by one generating automorphism.
struct AutomorphismAction {
  Graph base;
  std::vector<Vertex> generator;
  int order = 1;
};

// Validates that `generator` is an automorphism and records its order.
AutomorphismAction make_action(Graph base, std::vector<Vertex> generator);

// Complementation A -> I \ A on the basis graph of M_{n,n}; base vertex ids
// follow basis_graph(complete_matroid(n)).
AutomorphismAction antipodal_action(int n);

// Vertices of the orbit of v (v first).
std::vector<Vertex> orbit_of(const AutomorphismAction& action, Vertex v);

struct QuotientResult {
  Graph graph;
  std::vector<Vertex> projection;  // base vertex -> orbit id
  std::vector<std::vector<Vertex>> orbits;  // ascending by least member
};

// Throws kNotFree (with a fixed vertex; the trivial group counts as not
// free) or kAdjacentOrbit (with an edge inside one orbit).
QuotientResult quotient(const AutomorphismAction& action);

// min over v and non-identity g of d(v, g v); 0 when the action is not free.
int min_displacement(const AutomorphismAction& action);

// Largest r with 2r + 2 <= displacement, or -1 when there is none.
int local_isometry_radius(int displacement);

}  // namespace mbg

#endif  // MBG_MATROID_HPP_
