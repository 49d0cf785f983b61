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

#include "mbg/complex.hpp"

#include <algorithm>
#include <string>

#include "mbg/error.hpp"

namespace mbg {

SquareTuple canonical_square(Vertex a, Vertex b, Vertex c, Vertex d) {
  std::array<Vertex, 4> cyc{a, b, c, d};
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc[1] > cyc[3]) std::swap(cyc[1], cyc[3]);
  return {cyc[0], cyc[1], cyc[2], cyc[3]};
}

bool is_square(const Graph& g, const SquareTuple& s) {
  const std::array<Vertex, 4> c{s.u1, s.u2, s.u3, s.u4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (c[i] == c[j]) return false;
    }
  }
  return g.adjacent(s.u1, s.u2) && g.adjacent(s.u2, s.u3) && g.adjacent(s.u3, s.u4) &&
         g.adjacent(s.u4, s.u1) && !g.adjacent(s.u1, s.u3) && !g.adjacent(s.u2, s.u4);
}

std::vector<SquareTuple> enumerate_squares(const Graph& g) {
  std::vector<SquareTuple> out;
  for_each_square(g, [&](const SquareTuple& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.size(); ++a) {
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

TriangleSquareComplex build_complex(Graph g) {
  TriangleSquareComplex x;
  x.triangles = enumerate_triangles(g);
  x.squares = enumerate_squares(g);
  x.graph = std::move(g);
  return x;
}

std::vector<Vertex> Star::vertices() const {
  std::vector<Vertex> out{center};
  for (auto [a, b] : edges) out.push_back(a == center ? b : a);
  for (const auto& t : triangles) out.insert(out.end(), t.begin(), t.end());
  for (const auto& s : squares) {
    out.push_back(s.u1);
    out.push_back(s.u2);
    out.push_back(s.u3);
    out.push_back(s.u4);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> Star::skeleton_edges() const {
  std::vector<Edge> out;
  auto add = [&](Vertex a, Vertex b) { out.emplace_back(std::min(a, b), std::max(a, b)); };
  for (auto [a, b] : edges) add(a, b);
  for (const auto& t : triangles) {
    add(t[0], t[1]);
    add(t[1], t[2]);
    add(t[0], t[2]);
  }
  for (const auto& s : squares) {
    add(s.u1, s.u2);
    add(s.u2, s.u3);
    add(s.u3, s.u4);
    add(s.u4, s.u1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Star star(const TriangleSquareComplex& x, Vertex v) {
  if (v < 0 || v >= x.graph.size()) {
    throw Error(ErrorCode::kVertexOutOfRange, "star center out of range", {v});
  }
  Star s;
  s.center = v;
  for (Vertex w : x.graph.neighbors(v)) s.edges.emplace_back(std::min(v, w), std::max(v, w));
  for (const auto& t : x.triangles) {
    if (t[0] == v || t[1] == v || t[2] == v) s.triangles.push_back(t);
  }
  for (const auto& q : x.squares) {
    if (q.u1 == v || q.u2 == v || q.u3 == v || q.u4 == v) s.squares.push_back(q);
  }
  return s;
}

Star star_of(const Graph& g, Vertex v) {
  Star s;
  s.center = v;
  auto nb = g.neighbors(v);
  // (c, a): a ~ v, c ~ a, c outside B_1(v).
  std::vector<std::pair<Vertex, Vertex>> far;
  for (Vertex a : nb) {
    s.edges.emplace_back(std::min(v, a), std::max(v, a));
    for (Vertex c : g.neighbors(a)) {
      if (c != v && !g.adjacent(v, c)) far.emplace_back(c, a);
    }
  }
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) {
      if (g.adjacent(nb[i], nb[j])) {
        Triangle t{v, nb[i], nb[j]};
        std::sort(t.begin(), t.end());
        s.triangles.push_back(t);
      }
    }
  }
  std::sort(far.begin(), far.end());
  for (size_t lo = 0; lo < far.size();) {
    size_t hi = lo;
    while (hi < far.size() && far[hi].first == far[lo].first) ++hi;
    for (size_t i = lo; i < hi; ++i) {
      for (size_t j = i + 1; j < hi; ++j) {
        if (!g.adjacent(far[i].second, far[j].second)) {
          s.squares.push_back(canonical_square(v, far[i].second, far[lo].first, far[j].second));
        }
      }
    }
    lo = hi;
  }
  std::sort(s.triangles.begin(), s.triangles.end());
  std::sort(s.squares.begin(), s.squares.end());
  return s;
}

namespace {

GraphCertificate star_certificate(const Star& s, int bound) {
  const auto verts = s.vertices();
  auto index = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  std::vector<Edge> edges;
  for (auto [a, b] : s.skeleton_edges()) edges.emplace_back(index(a), index(b));
  const Graph g = Graph::from_edges(static_cast<int>(verts.size()), edges);
  CertificateOptions o;
  o.root = index(s.center);
  o.max_vertices = bound;
  return certificate(g, o);
}

}  // namespace

bool star_isomorphic(const TriangleSquareComplex& x1, Vertex v1, const TriangleSquareComplex& x2,
                     Vertex v2, int bound) {
  const Star s1 = star(x1, v1), s2 = star(x2, v2);
  if (s1.edges.size() != s2.edges.size() || s1.triangles.size() != s2.triangles.size() ||
      s1.squares.size() != s2.squares.size()) {
    return false;
  }
  return star_certificate(s1, bound) == star_certificate(s2, bound);
}

std::optional<std::string> check_star_map(const Graph& cover, Vertex w, const Graph& base,
                                          std::span<const Vertex> f) {
  const Star up = star_of(cover, w);
  const Star down = star_of(base, f[w]);
  const auto up_vertices = up.vertices();
  const auto down_vertices = down.vertices();
  std::vector<Vertex> image;
  for (Vertex x : up_vertices) image.push_back(f[x]);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    return "map is not injective on the star of " + std::to_string(w);
  }
  if (image != down_vertices) {
    return "star of " + std::to_string(w) + " has " + std::to_string(up_vertices.size()) +
           " vertices, star of its image has " + std::to_string(down_vertices.size());
  }
  std::vector<Edge> edges;
  for (auto [a, b] : up.edges) edges.emplace_back(std::min(f[a], f[b]), std::max(f[a], f[b]));
  std::sort(edges.begin(), edges.end());
  if (edges != down.edges) return "edges at " + std::to_string(w) + " do not map onto the image star";
  std::vector<Triangle> tris;
  for (auto t : up.triangles) {
    Triangle m{f[t[0]], f[t[1]], f[t[2]]};
    std::sort(m.begin(), m.end());
    tris.push_back(m);
  }
  std::sort(tris.begin(), tris.end());
  if (tris != down.triangles) return "triangles at " + std::to_string(w) + " do not map onto the image star";
  std::vector<SquareTuple> sqs;
  for (const auto& q : up.squares) sqs.push_back(canonical_square(f[q.u1], f[q.u2], f[q.u3], f[q.u4]));
  std::sort(sqs.begin(), sqs.end());
  if (sqs != down.squares) return "squares at " + std::to_string(w) + " do not map onto the image star";
  return std::nullopt;
}

}  // namespace mbg
