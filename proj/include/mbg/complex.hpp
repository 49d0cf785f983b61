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

#ifndef MBG_COMPLEX_HPP_
#define MBG_COMPLEX_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbg/certificate.hpp"
#include "mbg/graph.hpp"

namespace mbg {

// Induced 4-cycle u1 u2 u3 u4 in cyclic order, u1 minimal and u2 < u4.
struct SquareTuple {
  Vertex u1, u2, u3, u4;
  friend auto operator<=>(const SquareTuple&, const SquareTuple&) = default;
};

using Triangle = std::array<Vertex, 3>;  // ascending

SquareTuple canonical_square(Vertex a, Vertex b, Vertex c, Vertex d);
bool is_square(const Graph& g, const SquareTuple& s);

// Each induced 4-cycle exactly once, in ascending order.
std::vector<SquareTuple> enumerate_squares(const Graph& g);
std::vector<Triangle> enumerate_triangles(const Graph& g);

// Calls fn(square) for every square without materializing the list.
template <typename Fn>
void for_each_square(const Graph& g, Fn&& fn) {
  std::vector<int> mark(g.size(), -1);
  std::vector<Vertex> common;
  for (Vertex a = 0; a < g.size(); ++a) {
    // c at distance 2 with c > a; b, d common neighbors with a < b < d.
    std::vector<Vertex> far;
    for (Vertex b : g.neighbors(a)) {
      for (Vertex c : g.neighbors(b)) {
        if (c > a && mark[c] != a && !g.adjacent(a, c)) {
          mark[c] = a;
          far.push_back(c);
        }
      }
    }
    std::sort(far.begin(), far.end());
    for (Vertex c : far) {
      common.clear();
      auto na = g.neighbors(a), nc = g.neighbors(c);
      std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(), std::back_inserter(common));
      for (size_t i = 0; i < common.size(); ++i) {
        if (common[i] < a) continue;
        for (size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) fn(SquareTuple{a, common[i], c, common[j]});
        }
      }
    }
  }
}

// Flag triangle-square complex X(G): cells are all triangles and all
// induced squares of the graph.
struct TriangleSquareComplex {
  Graph graph;
  std::vector<Triangle> triangles;
  std::vector<SquareTuple> squares;
};

TriangleSquareComplex build_complex(Graph g);

struct Star {
  Vertex center = 0;
  std::vector<Edge> edges;  // incident edges (center, x), ascending in x
  std::vector<Triangle> triangles;
  std::vector<SquareTuple> squares;

  // Every vertex of a cell through the center, ascending.
  std::vector<Vertex> vertices() const;
  // Edges of all cells through the center (the star's 1-skeleton).
  std::vector<Edge> skeleton_edges() const;
};

Star star(const TriangleSquareComplex& x, Vertex v);
// Same cells computed from adjacency alone, without a prebuilt complex.
Star star_of(const Graph& g, Vertex v);

// Center-preserving isomorphism test of two stars: rooted certificate of the
// star 1-skeletons plus equal cell counts. Throws kTooLarge beyond `bound`.
bool star_isomorphic(const TriangleSquareComplex& x1, Vertex v1, const TriangleSquareComplex& x2,
                     Vertex v2, int bound = kDefaultCertificateBound);

// Checks that `f` restricted to St(w, cover) is a cell-preserving bijection
// onto St(f(w), base). Returns a failure description, or nullopt on success.
std::optional<std::string> check_star_map(const Graph& cover, Vertex w, const Graph& base,
                                          std::span<const Vertex> f);

}  // namespace mbg

#endif  // MBG_COMPLEX_HPP_
