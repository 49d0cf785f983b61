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

#include <iostream>
#include <random>

#include "fixtures.hpp"
#include "mbg/certificate.hpp"
#include "mbg/conditions.hpp"
#include "mbg/cover.hpp"
#include "mbg/error.hpp"
#include "mbg/matroid.hpp"
#include "oracles/oracles.hpp"

namespace mbg {
namespace {

using testing::cycle;
using testing::make;
using testing::octahedron;

CoverOptions checked() {
  CoverOptions o;
  o.checked = true;
  return o;
}

TEST(Cover, SquareDisc) {
  for (Vertex v = 0; v < 4; ++v) {
    const auto s = build_universal_cover(build_complex(cycle(4)), v, checked());
    EXPECT_TRUE(s.finished);
    EXPECT_EQ(s.cover.size(), 4);
    EXPECT_EQ(sheets(s), 1);
    EXPECT_EQ(s.f[0], v);
  }
}

TEST(Cover, Octahedron) {
  const auto s = build_universal_cover(build_complex(octahedron()), 0, checked());
  EXPECT_EQ(s.cover.size(), 6);
  EXPECT_EQ(sheets(s), 1);
  EXPECT_TRUE(verify_cover(s).pass);
}

TEST(Cover, CycleWithoutCellsExceedsBudget) {
  CoverOptions o;
  o.budget = 100;
  try {
    build_universal_cover(build_complex(cycle(5)), 0, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_THROW(build_universal_cover(build_complex(cycle(5)), 0), Error);
  o.budget = 3;
  EXPECT_THROW(build_universal_cover(build_complex(cycle(5)), 0, o), Error);
}

TEST(Cover, Errors) {
  EXPECT_THROW(build_universal_cover(build_complex(make(3, {{0, 1}})), 0), Error);
  EXPECT_THROW(build_universal_cover(build_complex(cycle(4)), 4), Error);
  CoverState unfinished;
  EXPECT_THROW(sheets(unfinished), Error);
  auto s = build_universal_cover(build_complex(cycle(4)), 0);
  s.cover = make(5, {});
  try {
    sheets(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonDivisible);
  }
}

TEST(Cover, SimplyConnected) {
  EXPECT_TRUE(is_simply_connected(build_complex(basis_graph(complete_matroid(3)).graph)));
  EXPECT_TRUE(is_simply_connected(build_complex(testing::complete(3))));
  EXPECT_TRUE(is_simply_connected(build_complex(make(1, {}))));
  // Hexagon with no 2-cells, closed up into a triangulated Moebius-free annulus:
  // the cone over C_6 is a disc.
  EXPECT_TRUE(is_simply_connected(build_complex(testing::wheel(6))));
}

TEST(Cover, HexagonalPrismIsNotSimplyConnected) {
  // C_6 x K_2: six squares around a cylinder, one generator of infinite order.
  std::vector<Edge> e;
  for (int i = 0; i < 6; ++i) {
    e.emplace_back(i, (i + 1) % 6);
    e.emplace_back(6 + i, 6 + (i + 1) % 6);
    e.emplace_back(i, 6 + i);
  }
  CoverOptions o;
  o.budget = 400;
  EXPECT_THROW(build_universal_cover(build_complex(make(12, e)), 0, o), Error);
}

TEST(Cover, SmallQuotientsHaveTwoSheets) {
  for (int n = 3; n <= 5; ++n) {
    const auto q = quotient(antipodal_action(n));
    const auto x = build_complex(q.graph);
    try {
      const auto s = build_universal_cover(x, 0);
      const int64_t k = sheets(s);
      const auto order = oracle::fundamental_group_order(q.graph);
      if (order) EXPECT_EQ(k, *order) << "n=" << n;
      std::cout << "n=" << n << " sheets " << k << " oracle " << order.value_or(-1) << "\n";
    } catch (const Error& e) {
      std::cout << "n=" << n << " " << e.what() << "\n";
    }
  }
}

TEST(VerifyCover, DetectsDeletedEdge) {
  auto s = build_universal_cover(build_complex(basis_graph(complete_matroid(3)).graph), 0);
  ASSERT_TRUE(verify_cover(s).pass);
  auto edges = s.cover.edges();
  const Edge dropped = edges[40];
  edges.erase(edges.begin() + 40);
  s.cover = make(s.cover.size(), edges);
  const auto report = verify_cover(s);
  EXPECT_FALSE(report.pass);
  const auto* cov = report.property("covering");
  ASSERT_NE(cov, nullptr);
  EXPECT_FALSE(cov->pass);
  EXPECT_TRUE(check_star_map(s.cover, dropped.first, s.base, s.f));
  EXPECT_TRUE(check_star_map(s.cover, dropped.second, s.base, s.f));
}

TEST(VerifyQuotient, Examples) {
  const auto a2 = antipodal_action(2);
  EXPECT_FALSE(verify_quotient_covering(a2.base, quotient(a2)).pass);
  const auto a3 = antipodal_action(3);
  const auto r3 = verify_quotient_covering(a3.base, quotient(a3));
  RecordProperty("n3_covering", r3.pass ? "yes" : "no");
  EXPECT_EQ(r3.properties[0].checked, 20);
}

// Properties on the matroid corpus: determinism, monotone levels, f maps
// cells to cells, verification passes, idempotence and basepoint independence.
TEST(CoverProperty, CorpusInvariants) {
  int covered = 0;
  for (const auto& [name, ss] : testing::matroid_corpus()) {
    const Graph g = basis_graph(ss).graph;
    if (g.size() > 60) continue;
    const auto x = build_complex(g);
    const auto s = build_universal_cover(x, 0, checked());
    const auto again = build_universal_cover(x, 0);
    ASSERT_EQ(s.cover, again.cover) << name;
    ASSERT_EQ(s.f, again.f) << name;
    ASSERT_EQ(sheets(s), 1) << name;
    for (int i = 0; i + 1 < s.levels(); ++i) ASSERT_LE(s.level_start[i], s.level_start[i + 1]);
    ASSERT_EQ(s.level_start[s.levels()], s.level_start[s.levels() - 1] + (s.levels() == 1 ? 0 : 0) +
                                             (s.level_start[s.levels()] - s.level_start[s.levels() - 1]));
    const auto report = verify_cover(s);
    for (const auto& p : report.properties) ASSERT_TRUE(p.pass) << name << " " << p.name << ": " << p.failure;
    for (const auto& t : enumerate_triangles(s.cover)) {
      ASSERT_TRUE(g.adjacent(s.f[t[0]], s.f[t[1]]) && g.adjacent(s.f[t[1]], s.f[t[2]]) &&
                  g.adjacent(s.f[t[0]], s.f[t[2]]));
    }
    const auto twice = build_universal_cover(build_complex(s.cover), 0);
    ASSERT_EQ(sheets(twice), 1) << name;
    const auto summary = summarize(s);
    for (Vertex v = 1; v < g.size(); v += 5) {
      const auto other = summarize(build_universal_cover(x, v));
      ASSERT_EQ(other.vertices, summary.vertices);
      ASSERT_EQ(other.triangles, summary.triangles);
      ASSERT_EQ(other.squares, summary.squares);
      ASSERT_EQ(other.sheets, summary.sheets);
    }
    if (maurer_check(g, MaurerMode::kMatroid).pass) {
      ASSERT_FALSE(find_pattern(s.cover, PatternKind::kK23)) << name;
      ASSERT_FALSE(find_pattern(s.cover, PatternKind::kW4Minus)) << name;
    }
    ++covered;
  }
  EXPECT_GT(covered, 300);
}

Graph hypercube(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < (1 << n); ++v) {
    for (int b = 0; b < n; ++b) {
      if (!(v >> b & 1)) e.emplace_back(v, v | 1 << b);
    }
  }
  return make(1 << n, e);
}

// Folded cubes are antipodal quotients of square-complete complexes, so their
// fundamental group has order 2 once the fold is far enough apart.
TEST(Cover, FoldedCubesAgreeWithCosetEnumeration) {
  for (int n = 5; n <= 6; ++n) {
    const Graph q = hypercube(n);
    std::vector<Vertex> gen(q.size());
    for (Vertex v = 0; v < q.size(); ++v) gen[v] = v ^ (q.size() - 1);
    const auto folded = quotient(make_action(q, gen));
    const auto s = build_universal_cover(build_complex(folded.graph), 0, checked());
    EXPECT_TRUE(verify_cover(s).pass);
    EXPECT_EQ(sheets(s), 2) << "n=" << n;
    EXPECT_EQ(oracle::fundamental_group_order(folded.graph), 2) << "n=" << n;
    EXPECT_EQ(certificate(s.cover), certificate(q)) << "n=" << n;
  }
}

// Property: whenever a random complex yields a cover that passes
// verification, its sheet count is the order of the fundamental group
// computed by coset enumeration.
TEST(CoverProperty, VerifiedCoversAgreeWithCosetEnumeration) {
  std::mt19937_64 rng(23);
  int verified = 0, nontrivial = 0;
  for (int t = 0; t < 400; ++t) {
    const Graph g = testing::random_graph(rng, 4 + static_cast<int>(rng() % 8), 0.3 + 0.5 * (rng() % 10) / 10.0);
    if (!is_connected(g)) continue;
    CoverOptions o;
    o.budget = 40 * g.size();
    try {
      const auto s = build_universal_cover(build_complex(g), 0, o);
      if (!verify_cover(s).pass) continue;
      const auto order = oracle::fundamental_group_order(g);
      ASSERT_TRUE(order.has_value()) << "trial " << t;
      ASSERT_EQ(sheets(s), *order) << "trial " << t;
      ++verified;
      nontrivial += *order > 1;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kBudgetExceeded) << e.what();
    }
  }
  EXPECT_GT(verified, 50);
  std::cout << verified << " verified covers, " << nontrivial << " with nontrivial group\n";
}

}  // namespace
}  // namespace mbg
