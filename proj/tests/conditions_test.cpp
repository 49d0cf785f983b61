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

#include <random>

#include "fixtures.hpp"
#include "mbg/certificate.hpp"
#include "mbg/conditions.hpp"
#include "mbg/error.hpp"
#include "mbg/matroid.hpp"

namespace mbg {
namespace {

using testing::cycle;
using testing::k23;
using testing::make;
using testing::octahedron;

Graph m33() { return basis_graph(complete_matroid(3)).graph; }
Graph even4() { return basis_graph(even_subsets(4)).graph; }

std::vector<std::pair<std::string, Vertex>> roles(const ConditionReport& r, size_t i = 0) {
  return r.witnesses.at(i).roles;
}

void expect_revalidates(const Graph& g, const ConditionReport& r) {
  EXPECT_EQ(r.pass, r.witnesses.empty());
  for (const auto& w : r.witnesses) EXPECT_TRUE(revalidate(g, r, w)) << condition_name(r.id);
}

TEST(IntervalCondition, Examples) {
  EXPECT_TRUE(check_interval_condition(octahedron()).pass);
  EXPECT_TRUE(check_interval_condition(cycle(4)).pass);
  const auto r = check_interval_condition(k23());
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(roles(r), (std::vector<std::pair<std::string, Vertex>>{{"u", 0}, {"w", 1}}));
  expect_revalidates(k23(), r);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(check_interval_condition(octahedron()).stat("octahedron"), 3);
}

TEST(Positioning, Examples) {
  EXPECT_TRUE(check_positioning(cycle(4)).pass);
  for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(check_positioning(cycle(4), v).pass);
  const auto r = check_positioning(k23(), Vertex{4});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(roles(r), (std::vector<std::pair<std::string, Vertex>>{
                          {"v", 4}, {"u1", 0}, {"u2", 2}, {"u3", 1}, {"u4", 3}}));
  expect_revalidates(k23(), r);
  const auto all = check_positioning(m33());
  EXPECT_TRUE(all.pass);
  EXPECT_EQ(all.stat("scanned") % 20, 0);
  EXPECT_THROW(check_positioning(make(4, {{0, 1}, {2, 3}})), Error);
}

TEST(LocalPositioning, Examples) {
  const auto r = check_local_positioning(k23());
  EXPECT_FALSE(r.pass);
  expect_revalidates(k23(), r);
  const auto w = r.witnesses.at(0);
  EXPECT_EQ(*w.role("v"), 4);
  // Square 0-2-1-3 seen from 4: d(4,2) = d(4,3) = 2 but d(4,0) + d(4,1) = 2.
  EXPECT_EQ(*w.role("u1"), 0);
  EXPECT_EQ(*w.role("u3"), 1);
  EXPECT_TRUE(check_local_positioning(octahedron()).pass);
  const auto c4 = check_local_positioning(cycle(4));
  EXPECT_TRUE(c4.pass);
  EXPECT_EQ(c4.stat("scanned"), 0);
}

TEST(TriangleSquarePyramid, Examples) {
  for (Vertex v = 0; v < 6; ++v) {
    EXPECT_TRUE(check_triangle_condition(octahedron(), v).pass);
    EXPECT_TRUE(check_square_pyramid(octahedron(), v).pass);
  }
  const auto tc = check_triangle_condition(cycle(5), 0);
  EXPECT_FALSE(tc.pass);
  EXPECT_EQ(roles(tc), (std::vector<std::pair<std::string, Vertex>>{{"u", 2}, {"w", 3}}));
  expect_revalidates(cycle(5), tc);
  for (Vertex v = 0; v < 6; ++v) {
    const auto spc = check_square_pyramid(cycle(6), v);
    ASSERT_FALSE(spc.pass);
    EXPECT_EQ(*spc.witnesses[0].role("u"), (v + 3) % 6);
    std::vector<Vertex> pair{*spc.witnesses[0].role("w"), *spc.witnesses[0].role("w'")};
    std::vector<Vertex> expect{(v + 2) % 6, (v + 4) % 6};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(pair, expect);
    expect_revalidates(cycle(6), spc);
  }
  EXPECT_THROW(check_triangle_condition(make(3, {{0, 1}}), 0), Error);
}

TEST(LocalTriangle, Examples) {
  EXPECT_TRUE(check_local_triangle(octahedron()).pass);
  EXPECT_TRUE(check_local_triangle(cycle(4)).pass);
  const auto r = check_local_triangle(cycle(5));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(roles(r), (std::vector<std::pair<std::string, Vertex>>{{"v", 0}, {"u", 2}, {"w", 3}}));
  expect_revalidates(cycle(5), r);
}

TEST(LinkCondition, Examples) {
  const Graph g = m33();
  const Graph k33 = make(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  for (Vertex v = 0; v < 20; ++v) {
    const auto r = check_link_condition(g, v);
    ASSERT_TRUE(r.pass);
    const auto& root = r.link_roots.at(v);
    EXPECT_EQ(certificate(root.root), certificate(k33));
  }
  const auto oct = check_link_condition(octahedron(), Vertex{2});
  ASSERT_TRUE(oct.pass);
  EXPECT_EQ(certificate(oct.link_roots.at(2).root), certificate(cycle(4)));
  const auto w5 = check_link_condition(testing::wheel(5), Vertex{0});
  EXPECT_FALSE(w5.pass);
  ASSERT_TRUE(w5.witnesses[0].pattern);
  EXPECT_EQ(w5.witnesses[0].pattern->kind, PatternKind::kOddHole);
  EXPECT_EQ(w5.witnesses[0].pattern->vertices.size(), 5u);
  expect_revalidates(testing::wheel(5), w5);
  const auto all = check_link_condition(g);
  EXPECT_EQ(all.id, ConditionId::kLCAll);
  EXPECT_EQ(all.link_roots.size(), 20u);
}

TEST(GeneralizedLink, Examples) {
  EXPECT_TRUE(check_generalized_link(octahedron()).pass);
  const auto cone = check_generalized_link(testing::cone_over_claw());
  EXPECT_FALSE(cone.pass);
  // The claw center's link is a claw as well.
  ASSERT_EQ(cone.witnesses.size(), 2u);
  EXPECT_EQ(*cone.witnesses[0].role("v"), 0);
  EXPECT_EQ(cone.witnesses[0].pattern->kind, PatternKind::kClaw);
  expect_revalidates(testing::cone_over_claw(), cone);
  const auto ev = check_generalized_link(even4());
  EXPECT_TRUE(ev.pass);
  EXPECT_EQ(certificate(ev.link_roots.at(0).root), certificate(testing::complete(4)));
}

TEST(IC4, Examples) {
  EXPECT_TRUE(check_ic4(octahedron()).pass);
  const Graph g = even4();
  EXPECT_TRUE(check_ic4(g).pass);
  // Vertex 0 is the empty set and the last vertex the full set.
  const auto iv = interval(g, 0, g.size() - 1);
  EXPECT_EQ(iv.size(), 8u);
  EXPECT_EQ(certificate(induced(g, iv).graph), certificate(testing::cocktail(4)));
  const auto r = check_ic4(k23());
  EXPECT_FALSE(r.pass);
  expect_revalidates(k23(), r);
  EXPECT_NE(r.witnesses[0].reason.find("non-neighbors"), std::string::npos) << r.witnesses[0].reason;
}

TEST(Maurer, Examples) {
  const auto a = maurer_check(m33(), MaurerMode::kMatroid);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.min_degree, 9);
  const auto b = maurer_check(k23(), MaurerMode::kMatroid);
  EXPECT_FALSE(b.pass);
  for (const auto& r : b.reports) {
    if (r.id == ConditionId::kIC || r.id == ConditionId::kLPC) EXPECT_FALSE(r.pass);
    expect_revalidates(k23(), r);
  }
  const auto c = maurer_check(even4(), MaurerMode::kEvenDelta);
  for (const auto& r : c.reports) EXPECT_TRUE(r.pass) << condition_name(r.id);
  EXPECT_THROW(maurer_check(make(2, {}), MaurerMode::kMatroid), Error);
}

TEST(Forbidden, Fixtures) {
  const auto p = check_forbidden_patterns(testing::propeller());
  ASSERT_FALSE(p.pass);
  EXPECT_EQ(p.witnesses[0].pattern->kind, PatternKind::kPropeller);
  const auto h = check_forbidden_patterns(testing::half_open_book());
  ASSERT_FALSE(h.pass);
  EXPECT_EQ(h.witnesses[0].pattern->kind, PatternKind::kHalfOpenBook);
  const auto w = check_forbidden_patterns(testing::wheel(5));
  ASSERT_FALSE(w.pass);
  EXPECT_EQ(w.witnesses[0].pattern->kind, PatternKind::kOddWheel);
}

TEST(Sampling, DeterministicAndFlagged) {
  const Graph g = basis_graph(complete_matroid(4)).graph;
  CheckOptions o;
  o.force_sampling = true;
  o.pair_samples = 200;
  o.vertex_samples = 10;
  o.seed = 42;
  for (auto check : {check_interval_condition, check_local_positioning, check_ic4}) {
    const auto a = check(g, o);
    const auto b = check(g, o);
    EXPECT_FALSE(a.exhaustive);
    EXPECT_EQ(a.seed, 42u);
    EXPECT_EQ(a.stats, b.stats);
  }
  const auto ic = check_interval_condition(g, o);
  EXPECT_TRUE(ic.pass);
  EXPECT_EQ(ic.stat("scanned"), 200);
  const auto lpc = check_local_positioning(g, o);
  EXPECT_TRUE(lpc.pass);
  EXPECT_EQ(lpc.stat("scanned"), 200);
  const auto pc = check_positioning(g, std::nullopt, o);
  EXPECT_TRUE(pc.pass);
  EXPECT_FALSE(pc.exhaustive);
  const auto lc = check_link_condition(g, std::nullopt, o);
  EXPECT_EQ(lc.stat("scanned"), 10);
  EXPECT_TRUE(check_local_triangle(g, o).pass);
  EXPECT_TRUE(check_forbidden_patterns(g, o).pass);
}

TEST(Sampling, FindsViolations) {
  CheckOptions o;
  o.force_sampling = true;
  o.pair_samples = 50;
  const auto ic = check_interval_condition(k23(), o);
  EXPECT_FALSE(ic.pass);
  expect_revalidates(k23(), ic);
  const auto lpc = check_local_positioning(k23(), o);
  EXPECT_FALSE(lpc.pass);
  expect_revalidates(k23(), lpc);
}

// Property: every witness of every checker re-validates, in both exhaustive
// and sampled mode, and witnesses are capped while violations are counted.
TEST(ConditionsProperty, WitnessesRevalidate) {
  std::mt19937_64 rng(17);
  int64_t witnesses = 0;
  for (int t = 0; t < 150; ++t) {
    Graph g = testing::random_graph(rng, 5 + t % 9, 0.35);
    if (!is_connected(g)) continue;
    CheckOptions o;
    o.force_sampling = t % 2 == 1;
    o.pair_samples = 40;
    o.vertex_samples = 4;
    o.seed = t;
    std::vector<ConditionReport> reports{
        check_interval_condition(g, o), check_positioning(g, std::nullopt, o),
        check_local_positioning(g, o),  check_triangle_condition(g, 0),
        check_square_pyramid(g, 0),     check_local_triangle(g, o),
        check_link_condition(g, std::nullopt, o), check_generalized_link(g, o),
        check_ic4(g, o),                check_forbidden_patterns(g, o)};
    for (const auto& r : reports) {
      ASSERT_EQ(r.pass, r.witnesses.empty());
      ASSERT_LE(r.witnesses.size(), o.max_witnesses);
      ASSERT_EQ(r.pass, r.stat("violations") == 0);
      for (const auto& w : r.witnesses) {
        ++witnesses;
        ASSERT_TRUE(revalidate(g, r, w)) << condition_name(r.id) << " trial " << t;
      }
    }
  }
  EXPECT_GT(witnesses, 200);
}

TEST(Revalidate, RejectsNonViolations) {
  const auto r = check_interval_condition(k23());
  ConditionWitness fake{{{"u", 2}, {"w", 3}}, std::nullopt, ""};
  EXPECT_FALSE(revalidate(k23(), r, fake));
  ConditionWitness out_of_range{{{"u", 9}, {"w", 3}}, std::nullopt, ""};
  EXPECT_FALSE(revalidate(k23(), r, out_of_range));
}

}  // namespace
}  // namespace mbg
