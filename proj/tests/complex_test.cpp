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

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "mbg/complex.hpp"
#include "mbg/error.hpp"
#include "mbg/matroid.hpp"

namespace mbg {
namespace {

using testing::cycle;
using testing::make;
using testing::octahedron;

TEST(BuildComplex, Counts) {
  const auto k3 = build_complex(testing::complete(3));
  EXPECT_EQ(k3.triangles.size(), 1u);
  EXPECT_EQ(k3.squares.size(), 0u);
  const auto c4 = build_complex(cycle(4));
  EXPECT_EQ(c4.triangles.size(), 0u);
  ASSERT_EQ(c4.squares.size(), 1u);
  EXPECT_EQ(c4.squares[0], (SquareTuple{0, 1, 2, 3}));
  const auto oct = build_complex(octahedron());
  EXPECT_EQ(oct.triangles.size(), 8u);
  EXPECT_EQ(oct.squares.size(), 3u);
}

TEST(Star, Examples) {
  const auto oct = build_complex(octahedron());
  for (Vertex v = 0; v < 6; ++v) {
    const Star s = star(oct, v);
    EXPECT_EQ(s.edges.size(), 4u);
    EXPECT_EQ(s.triangles.size(), 4u);
    EXPECT_EQ(s.squares.size(), 2u);
  }
  const Star c = star(build_complex(cycle(4)), 2);
  EXPECT_EQ(c.edges.size(), 2u);
  EXPECT_EQ(c.squares.size(), 1u);
  const Star iso = star(build_complex(make(2, {{0, 1}})), 0);
  EXPECT_EQ(iso.edges.size(), 1u);
  const Star empty = star(build_complex(make(1, {})), 0);
  EXPECT_TRUE(empty.edges.empty() && empty.triangles.empty() && empty.squares.empty());
  EXPECT_EQ(empty.vertices(), std::vector<Vertex>{0});
  EXPECT_THROW(star(oct, 6), Error);
}

TEST(StarIsomorphic, Examples) {
  const auto oct = build_complex(octahedron());
  EXPECT_TRUE(star_isomorphic(oct, 0, oct, 3));
  EXPECT_FALSE(star_isomorphic(oct, 0, build_complex(cycle(4)), 0));
  const auto b33 = build_complex(basis_graph(complete_matroid(3)).graph);
  for (Vertex v = 1; v < 20; ++v) EXPECT_TRUE(star_isomorphic(b33, 0, b33, v));
  EXPECT_THROW(star_isomorphic(b33, 0, b33, 1, 5), Error);
}

TEST(StarMap, IdentityAndDefect) {
  const Graph g = basis_graph(complete_matroid(3)).graph;
  std::vector<Vertex> id(g.size());
  std::iota(id.begin(), id.end(), 0);
  for (Vertex v = 0; v < g.size(); ++v) EXPECT_FALSE(check_star_map(g, v, g, id));
  auto edges = g.edges();
  const Edge dropped = edges[0];
  edges.erase(edges.begin());
  const Graph h = make(g.size(), edges);
  EXPECT_TRUE(check_star_map(h, dropped.first, g, id));
  EXPECT_TRUE(check_star_map(h, dropped.second, g, id));
}

// Properties: flagness is idempotent, star_of matches the filtered cell lists,
// and incidence counts satisfy the handshake identities.
TEST(ComplexProperty, FlagnessStarsHandshake) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const Graph g = testing::random_graph(rng, 5 + t % 12, 0.3);
    const auto x = build_complex(g);
    const auto again = build_complex(x.graph);
    ASSERT_EQ(again.triangles, x.triangles);
    ASSERT_EQ(again.squares, x.squares);
    for (const auto& s : x.squares) {
      ASSERT_TRUE(is_square(g, s));
      ASSERT_LT(s.u1, s.u2);
      ASSERT_LT(s.u1, s.u3);
      ASSERT_LT(s.u2, s.u4);
    }
    std::map<Edge, int> tri_inc, sq_inc;
    for (const auto& tr : x.triangles) {
      tri_inc[{tr[0], tr[1]}]++;
      tri_inc[{tr[1], tr[2]}]++;
      tri_inc[{tr[0], tr[2]}]++;
    }
    for (const auto& s : x.squares) {
      for (auto [a, b] : {Edge{s.u1, s.u2}, Edge{s.u2, s.u3}, Edge{s.u3, s.u4}, Edge{s.u4, s.u1}}) {
        sq_inc[{std::min(a, b), std::max(a, b)}]++;
      }
    }
    int64_t tri_total = 0, sq_total = 0;
    for (auto [u, v] : g.edges()) {
      int common = 0;
      for (Vertex w = 0; w < g.size(); ++w) common += g.adjacent(u, w) && g.adjacent(v, w);
      ASSERT_EQ(tri_inc[Edge(u, v)], common);
      tri_total += tri_inc[Edge(u, v)];
      sq_total += sq_inc[Edge(u, v)];
    }
    ASSERT_EQ(tri_total, 3 * static_cast<int64_t>(x.triangles.size()));
    ASSERT_EQ(sq_total, 4 * static_cast<int64_t>(x.squares.size()));
    for (Vertex v = 0; v < g.size(); ++v) {
      const Star a = star(x, v), b = star_of(g, v);
      ASSERT_EQ(a.edges, b.edges);
      ASSERT_EQ(a.triangles, b.triangles);
      ASSERT_EQ(a.squares, b.squares);
    }
  }
}

}  // namespace
}  // namespace mbg
