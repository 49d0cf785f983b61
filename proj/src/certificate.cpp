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

#include "mbg/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "mbg/error.hpp"

namespace mbg {
namespace {

using Coloring = std::vector<int>;

// Renumbers keys to dense ranks 0..k-1 in ascending key order.
template <typename Key>
int rank_by(const std::vector<Key>& keys, Coloring& out) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  out.assign(n, 0);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++rank;
    out[order[i]] = rank;
  }
  return n == 0 ? 0 : rank + 1;
}

// Color refinement to the coarsest equitable coloring finer than `c`. The
// result depends only on the isomorphism type of (g, c).
int refine(const Graph& g, Coloring& c) {
  const int n = g.size();
  int classes = 0;
  {
    std::vector<int> tmp = c;
    classes = rank_by(tmp, c);
  }
  std::vector<std::vector<int>> keys(n);
  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      auto& k = keys[v];
      k.clear();
      k.push_back(c[v]);
      for (Vertex w : g.neighbors(v)) k.push_back(c[w]);
      std::sort(k.begin() + 1, k.end());
    }
    Coloring next;
    const int next_classes = rank_by(keys, next);
    c.swap(next);
    if (next_classes == classes) return classes;
    classes = next_classes;
  }
}

class Canonizer {
 public:
  Canonizer(const Graph& g, std::vector<int> base_colors)
      : g_(g), n_(g.size()), base_colors_(std::move(base_colors)) {}

  CanonicalForm run() {
    Coloring c = base_colors_;
    refine(g_, c);
    std::vector<Vertex> prefix;
    search(c, prefix);
    CanonicalForm out;
    out.labeling = best_labeling_;
    out.cert.bytes = encode(best_code_);
    return out;
  }

 private:
  using Code = std::vector<uint64_t>;

  Code leaf_code(const Coloring& c) const {
    Code code;
    code.reserve(n_ + g_.edge_count() + 1);
    code.push_back(static_cast<uint64_t>(n_));
    std::vector<int> color_at(n_);
    for (Vertex v = 0; v < n_; ++v) color_at[c[v]] = base_colors_[v];
    for (int x : color_at) code.push_back(static_cast<uint64_t>(x));
    std::vector<uint64_t> edges;
    edges.reserve(g_.edge_count());
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex w : g_.neighbors(u)) {
        if (u < w) {
          uint64_t a = c[u], b = c[w];
          if (a > b) std::swap(a, b);
          edges.push_back((a << 32) | b);
        }
      }
    }
    std::sort(edges.begin(), edges.end());
    code.insert(code.end(), edges.begin(), edges.end());
    return code;
  }

  std::string encode(const Code& code) const {
    std::string s;
    s.reserve(code.size() * 8);
    for (uint64_t x : code) {
      for (int i = 7; i >= 0; --i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
    }
    return s;
  }

  void record_automorphism(const Coloring& leaf, const Coloring& reference) {
    // leaf and reference both map vertices to positions; compose.
    std::vector<Vertex> ref_inv(n_);
    for (Vertex v = 0; v < n_; ++v) ref_inv[reference[v]] = v;
    std::vector<Vertex> perm(n_);
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      perm[v] = ref_inv[leaf[v]];
      identity &= perm[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(perm));
  }

  // Orbits of the group generated by the known automorphisms fixing every
  // vertex of `prefix`.
  std::vector<int> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& p : automorphisms_) {
      bool fixes = true;
      for (Vertex v : prefix) {
        if (p[v] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        int a = find(v), b = find(p[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const Coloring& c, std::vector<Vertex>& prefix) {
    // Target cell: smallest non-singleton color class, lowest color first.
    std::vector<int> count(n_, 0);
    for (Vertex v = 0; v < n_; ++v) ++count[c[v]];
    int target = -1;
    for (int col = 0; col < n_; ++col) {
      if (count[col] > 1 && (target < 0 || count[col] < count[target])) target = col;
    }
    if (target < 0) {
      visit_leaf(c);
      return;
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v) {
      if (c[v] == target) cell.push_back(v);
    }
    std::vector<Vertex> explored;
    for (Vertex cand : cell) {
      if (!explored.empty()) {
        const auto orbit = stabilizer_orbits(prefix);
        bool seen = false;
        for (Vertex e : explored) {
          if (orbit[e] == orbit[cand]) {
            seen = true;
            break;
          }
        }
        if (seen) continue;
      }
      explored.push_back(cand);
      Coloring child = c;
      // Individualize: cand keeps the class color, the rest move just above.
      for (Vertex v = 0; v < n_; ++v) child[v] = 2 * child[v] + ((child[v] == target && v != cand) ? 1 : 0);
      refine(g_, child);
      prefix.push_back(cand);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  void visit_leaf(const Coloring& c) {
    Code code = leaf_code(c);
    if (first_code_.empty()) {
      first_code_ = code;
      first_leaf_ = c;
      best_code_ = std::move(code);
      best_leaf_ = c;
      best_labeling_.assign(c.begin(), c.end());
      return;
    }
    if (code == first_code_) {
      record_automorphism(c, first_leaf_);
      return;
    }
    if (code == best_code_) {
      record_automorphism(c, best_leaf_);
      return;
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_leaf_ = c;
      best_labeling_.assign(c.begin(), c.end());
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> base_colors_;
  std::vector<std::vector<Vertex>> automorphisms_;
  Code first_code_, best_code_;
  Coloring first_leaf_, best_leaf_;
  std::vector<Vertex> best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const CertificateOptions& options) {
  const int n = g.size();
  if (n > options.max_vertices) {
    throw Error(ErrorCode::kTooLarge,
                "graph with " + std::to_string(n) + " vertices exceeds certificate bound " +
                    std::to_string(options.max_vertices));
  }
  if (!options.colors.empty() && static_cast<int>(options.colors.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "color vector size mismatch");
  }
  std::vector<int> base(n, 0);
  if (!options.colors.empty()) {
    // Shift so the root marker below stays distinct from every user color.
    for (Vertex v = 0; v < n; ++v) base[v] = 2 * options.colors[v] + 2;
  }
  if (options.root) {
    if (*options.root < 0 || *options.root >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "certificate root out of range", {*options.root});
    }
    base[*options.root] = 0;
    if (options.colors.empty()) {
      for (Vertex v = 0; v < n; ++v) {
        if (v != *options.root) base[v] = 1;
      }
    }
  }
  if (n == 0) return {GraphCertificate{std::string(8, '\0')}, {}};
  Canonizer canon(g, std::move(base));
  return canon.run();
}

GraphCertificate certificate(const Graph& g, const CertificateOptions& options) {
  return canonical_form(g, options).cert;
}

}  // namespace mbg
