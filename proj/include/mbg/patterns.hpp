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

#ifndef MBG_PATTERNS_HPP_
#define MBG_PATTERNS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mbg/graph.hpp"

namespace mbg {

// Witness role orders (every search returns the lexicographically first
// tuple in this order, scanning vertex ids ascending):
//   Propeller     (u, v, x, y, z)        shaft uv, tips x < y < z, u < v
//   HalfOpenBook  (u, v, w, x, y, z)     edges uv ux vw vz wy xy xz yz, u < w
//   OddWheel      (hub, c0, ..., c2k)    rim in cycle order, c0 minimal, c1 < c2k
//   K23           (a, b, x, y, z)        a < b the 3-valent side, x < y < z
//   W4Minus       (hub, x1, x2, x3, y)   rim x1 x2 x3 y, hub misses y, x1 < x3
//   Claw          (center, a, b, c)      a < b < c
//   Diamond       (u, v, x, y)           shared edge uv with u < v, tips x < y
//   OddHole       (c0, ..., c2k)         c0 minimal, c1 < c2k
enum class PatternKind {
  kPropeller,
  kHalfOpenBook,
  kOddWheel,
  kK23,
  kW4Minus,
  kClaw,
  kDiamond,
  kOddHole,
};

std::string_view pattern_name(PatternKind kind);

struct PatternWitness {
  PatternKind kind;
  std::vector<Vertex> vertices;
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// True iff `w` is an induced copy of its pattern with roles as documented.
bool is_valid_witness(const Graph& g, const PatternWitness& w);

inline constexpr int kDefaultOddHoleCap = 25;

struct PatternSearchOptions {
  // Restricts the first role (hub / center / u / c0) to these vertices; empty
  // means every vertex.
  std::span<const Vertex> anchors;
  // Longest odd hole considered.
  int odd_hole_cap = kDefaultOddHoleCap;
};

std::optional<PatternWitness> find_pattern(const Graph& g, PatternKind kind,
                                           const PatternSearchOptions& options = {});

enum class IntervalShapeKind { kSquare, kPyramid, kOctahedron, kOther };

struct IntervalShape {
  IntervalShapeKind kind;
  std::string reason;  // set for kOther
};

std::string_view interval_shape_name(IntervalShapeKind kind);

// Shape of the subgraph induced by I(u, v) for d(u, v) = 2. Throws
// kNotAtDistanceTwo otherwise.
IntervalShape classify_two_interval(const Graph& g, Vertex u, Vertex v);

// Root H of a line graph: input vertex x is the root edge edge_of[x].
// For bipartite roots `side` holds a proper 2-coloring (side 0 = B_0).
struct RootGraph {
  Graph root;
  std::vector<Edge> edge_of;
  std::vector<int> side;
};

// Why a graph is not a (bipartite) line graph. `pattern` is set whenever the
// refusal is a named forbidden configuration.
struct LineGraphObstruction {
  std::optional<PatternWitness> pattern;
  std::vector<Vertex> vertices;
  std::string reason;
};

using LineGraphResult = std::variant<RootGraph, LineGraphObstruction>;

LineGraphResult is_line_graph(const Graph& g);
LineGraphResult is_line_graph_of_bipartite(const Graph& g);

// Checks that root.edge_of realizes g as the line graph of root.root.
bool verify_root(const Graph& g, const RootGraph& root);

struct CocktailEmbedding {
  bool embeds = false;
  std::optional<Vertex> vertex;        // a vertex with >= 2 non-neighbors
  std::vector<Vertex> non_neighbors;   // two of them
  std::string reason;
};

// Whether g is an induced subgraph of the cocktail-party graph K_{d x 2}.
CocktailEmbedding is_induced_cocktail_subgraph(const Graph& g, int dimension);

}  // namespace mbg

#endif  // MBG_PATTERNS_HPP_
