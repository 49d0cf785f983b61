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

#ifndef MBG_TESTS_ORACLES_HPP_
#define MBG_TESTS_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mbg/graph.hpp"
#include "mbg/patterns.hpp"

namespace mbg::oracle {

// Exhaustive permutation search; intended for at most 8 vertices.
bool isomorphic(const Graph& a, const Graph& b, std::optional<Vertex> root_a = std::nullopt,
                std::optional<Vertex> root_b = std::nullopt);

// Lexicographically first ordered tuple realizing a fixed-size pattern,
// scanning all tuples of distinct vertices.
std::optional<std::vector<Vertex>> first_pattern(const Graph& g, PatternKind kind);

// Induced odd cycle of length >= 5 anywhere in g.
bool has_odd_hole(const Graph& g);

// Whether some simple (optionally bipartite) graph has g as its line graph.
bool has_line_root(const Graph& g, bool bipartite);

// Distance matrix by Floyd-Warshall; -1 for unreachable.
std::vector<std::vector<int>> distances(const Graph& g);

// Order of the fundamental group of the triangle-square complex of g, by
// coset enumeration over a spanning-tree presentation. nullopt when the
// enumeration needs more than `coset_cap` cosets.
std::optional<int64_t> fundamental_group_order(const Graph& g, int64_t coset_cap = 10000);

}  // namespace mbg::oracle

#endif  // MBG_TESTS_ORACLES_HPP_
