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

#ifndef MBG_CERTIFICATE_HPP_
#define MBG_CERTIFICATE_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>

#include "mbg/graph.hpp"

namespace mbg {

inline constexpr int kDefaultCertificateBound = 2000;

// Canonical byte string of a small graph. Two graphs get equal certificates
// iff they are isomorphic; with a root (or vertex colors) the isomorphism
// must also preserve the root (colors).
struct GraphCertificate {
  std::string bytes;
  friend auto operator<=>(const GraphCertificate&, const GraphCertificate&) = default;
};

struct CertificateOptions {
  std::optional<Vertex> root;
  // Optional per-vertex colors; empty means uncolored.
  std::span<const int> colors;
  int max_vertices = kDefaultCertificateBound;
};

// Throws kTooLarge when g.size() > options.max_vertices.
GraphCertificate certificate(const Graph& g, const CertificateOptions& options = {});

inline GraphCertificate certificate(const Graph& g, std::optional<Vertex> root) {
  CertificateOptions o;
  o.root = root;
  return certificate(g, o);
}

// A permutation p with p[v] = canonical position of v; applying it to g
// yields the graph whose certificate is returned.
struct CanonicalForm {
  GraphCertificate cert;
  std::vector<Vertex> labeling;
};

CanonicalForm canonical_form(const Graph& g, const CertificateOptions& options = {});

}  // namespace mbg

#endif  // MBG_CERTIFICATE_HPP_
