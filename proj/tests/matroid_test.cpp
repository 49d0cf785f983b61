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

#include "fixtures.hpp"
#include "mbg/certificate.hpp"
#include "mbg/error.hpp"
#include "mbg/matroid.hpp"

namespace mbg {
namespace {

SetSystem sets(int m, std::vector<std::vector<int>> family) {
  std::vector<Mask> bases;
  for (const auto& s : family) bases.push_back(mask_of(s));
  return SetSystem(m, bases);
}

TEST(VerifyMatroid, Examples) {
  EXPECT_TRUE(verify_matroid(uniform_matroid(4, 2)).holds);
  const auto bad = verify_matroid(sets(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->a_set, mask_of(std::vector<int>{0, 1}));
  EXPECT_EQ(bad.witness->b_set, mask_of(std::vector<int>{2, 3}));
  EXPECT_EQ(bad.witness->element, 0);
  EXPECT_FALSE(verify_matroid(sets(2, {{0}, {0, 1}})).holds);
}

TEST(VerifyEvenDelta, Examples) {
  EXPECT_TRUE(verify_even_delta_matroid(sets(2, {{}, {0, 1}})).holds);
  EXPECT_TRUE(verify_even_delta_matroid(even_subsets(4)).holds);
  const auto bad = verify_even_delta_matroid(sets(4, {{}, {0, 1, 2, 3}}));
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(bad.witness->a_set, Mask{0});
  EXPECT_EQ(bad.witness->b_set, Mask{15});
  EXPECT_EQ(bad.witness->element, 0);
}

TEST(BasisGraph, Examples) {
  const auto u24 = basis_graph(uniform_matroid(4, 2));
  EXPECT_EQ(u24.graph.size(), 6);
  EXPECT_EQ(u24.graph.edge_count(), 12);
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      const bool complementary = (u24.vertex_to_basis[a] ^ u24.vertex_to_basis[b]) == 15;
      EXPECT_EQ(u24.graph.adjacent(a, b), !complementary);
    }
  }
  EXPECT_EQ(certificate(u24.graph), certificate(testing::octahedron()));

  const auto m33 = basis_graph(complete_matroid(3));
  EXPECT_EQ(m33.graph.size(), 20);
  EXPECT_EQ(m33.graph.edge_count(), 90);
  for (Vertex v = 0; v < 20; ++v) EXPECT_EQ(m33.graph.degree(v), 9);

  const auto single = basis_graph(sets(3, {{0, 2}}));
  EXPECT_EQ(single.graph.size(), 1);
  EXPECT_EQ(single.graph.edge_count(), 0);
}

TEST(BasisGraph, SortedMaskOrder) {
  const auto r = basis_graph(uniform_matroid(4, 2));
  EXPECT_EQ(r.vertex_to_basis, (std::vector<Mask>{3, 5, 6, 9, 10, 12}));
}

TEST(Uniform, Counts) {
  EXPECT_EQ(uniform_matroid(4, 2).size(), 6);
  EXPECT_EQ(complete_matroid(4).size(), 70);
  EXPECT_EQ(uniform_matroid(3, 0).size(), 1);
  EXPECT_EQ(uniform_matroid(3, 0).bases()[0], Mask{0});
  EXPECT_THROW(uniform_matroid(40, 20, 1000), Error);
}

TEST(Graphic, Examples) {
  const auto k3 = graphic_matroid(3, testing::complete(3).edges());
  EXPECT_EQ(k3.size(), 3);
  EXPECT_EQ(certificate(basis_graph(k3).graph), certificate(testing::complete(3)));
  const auto c4 = graphic_matroid(4, testing::cycle(4).edges());
  EXPECT_EQ(c4.size(), 4);
  EXPECT_EQ(certificate(basis_graph(c4).graph), certificate(testing::complete(4)));
  EXPECT_EQ(graphic_matroid(4, testing::path(4).edges()).size(), 1);
  EXPECT_EQ(graphic_matroid(5, testing::complete(5).edges()).size(), 125);
  EXPECT_THROW(graphic_matroid(4, std::vector<Edge>{{0, 1}, {2, 3}}), Error);
}

TEST(Antipodal, Examples) {
  const auto a2 = antipodal_action(2);
  EXPECT_EQ(a2.order, 2);
  EXPECT_EQ(a2.generator, (std::vector<Vertex>{5, 4, 3, 2, 1, 0}));
  const auto a3 = antipodal_action(3);
  EXPECT_EQ(a3.base.size(), 20);
  for (Vertex v = 0; v < 20; ++v) EXPECT_NE(a3.generator[v], v);
  EXPECT_EQ(orbit_of(a3, 0).size(), 2u);
}

TEST(Quotient, Examples) {
  const auto q2 = quotient(antipodal_action(2));
  EXPECT_EQ(q2.graph.size(), 3);
  EXPECT_EQ(certificate(q2.graph), certificate(testing::complete(3)));
  EXPECT_EQ(quotient(antipodal_action(4)).graph.size(), 35);
  std::vector<Vertex> id{0, 1, 2, 3};
  try {
    quotient(make_action(testing::cycle(4), id));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFree);
  }
  EXPECT_THROW(make_action(testing::path(3), {1, 0, 2}), Error);
}

TEST(Displacement, Examples) {
  EXPECT_EQ(min_displacement(antipodal_action(2)), 2);
  EXPECT_EQ(min_displacement(antipodal_action(3)), 3);
  EXPECT_EQ(min_displacement(antipodal_action(4)), 4);
  EXPECT_EQ(local_isometry_radius(8), 3);
  EXPECT_EQ(local_isometry_radius(2), 0);
  EXPECT_EQ(local_isometry_radius(1), -1);
}

// Property: quotient projection preserves adjacency and, within the local
// isometry radius, balls upstairs and downstairs agree.
TEST(QuotientProperty, LocalIsometry) {
  for (int n = 2; n <= 5; ++n) {
    const auto action = antipodal_action(n);
    const auto q = quotient(action);
    for (auto [u, v] : action.base.edges()) {
      ASSERT_TRUE(q.graph.adjacent(q.projection[u], q.projection[v]));
    }
    const int r = local_isometry_radius(min_displacement(action));
    for (Vertex v = 0; v < action.base.size(); v += 7) {
      for (int rr = 0; rr <= r; ++rr) {
        const auto up = ball(action.base, v, rr);
        const auto down = ball(q.graph, q.projection[v], rr);
        ASSERT_EQ(certificate(up.sub.graph, up.root), certificate(down.sub.graph, down.root))
            << "n=" << n << " v=" << v << " r=" << rr;
      }
    }
  }
}

// Property over the corpus: basis graphs are connected, distances are half
// the symmetric difference, and every matroid is an even delta-matroid.
TEST(MatroidProperty, CorpusInvariants) {
  const auto corpus = testing::matroid_corpus();
  EXPECT_GT(corpus.size(), 300u);
  for (const auto& [name, ss] : corpus) {
    ASSERT_TRUE(verify_matroid(ss).holds) << name;
    ASSERT_TRUE(verify_even_delta_matroid(ss).holds) << name;
    const auto bg = basis_graph(ss);
    ASSERT_TRUE(is_connected(bg.graph)) << name;
    if (ss.ground_size() > 6) continue;
    for (Vertex a = 0; a < bg.graph.size(); ++a) {
      const auto d = bfs_distances(bg.graph, a);
      for (Vertex b = 0; b < bg.graph.size(); ++b) {
        ASSERT_EQ(2 * d[b], popcount(bg.vertex_to_basis[a] ^ bg.vertex_to_basis[b])) << name;
      }
    }
  }
}

TEST(SetSystem, Validation) {
  EXPECT_THROW(SetSystem(65, {}), Error);
  EXPECT_THROW(SetSystem(2, {Mask{4}}), Error);
  EXPECT_THROW(SetSystem(3, {Mask{5}, Mask{1}, Mask{5}}), Error);
  const SetSystem s(3, {Mask{5}, Mask{1}});
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(4));
}

}  // namespace
}  // namespace mbg
