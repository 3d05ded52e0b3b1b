// Copyright 2026 The gbsdeform Authors
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

// Canonical forms of edge-indexed graphs up to relabelling and sign flips.
//
// The certificate is the lexicographically least edge list over vertex
// orderings and sign flips. An edge is encoded as (lower rank, upper rank,
// index at the lower end, index at the upper end); a loop's two indices are
// ordered by (|value|, sign). Integers compare by absolute value first with
// positive before negative. Orderings are restricted to those compatible
// with an isomorphism-invariant colour refinement on |index| data, which
// keeps the result canonical while pruning most of the n! orderings.

#ifndef GBS_CANON_HPP_
#define GBS_CANON_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

struct CanonicalCertificate {
  std::string bytes;

  std::string hex() const;

  friend bool operator==(const CanonicalCertificate&,
                         const CanonicalCertificate&) = default;
  friend auto operator<=>(const CanonicalCertificate&,
                          const CanonicalCertificate&) = default;
};

struct CanonOptions {
  std::size_t max_vertices = 12;
};

struct CanonicalLabeling {
  CanonicalCertificate certificate;
  // vertex_order[r] is the vertex given rank r.
  std::vector<VertexId> vertex_order;
  // edge_slots[k] is the end placed in the first slot of the k-th encoded
  // edge; its opposite end fills the second slot.
  std::vector<EdgeEnd> edge_slots;
};

// Throws CapacityError when g has more than options.max_vertices vertices.
CanonicalLabeling canonical_labeling(const Graph& g,
                                     const CanonOptions& options = {});
CanonicalCertificate canonical_certificate(const Graph& g,
                                           const CanonOptions& options = {});
bool is_isomorphic(const Graph& a, const Graph& b,
                   const CanonOptions& options = {});

// Exhaustive check over all vertex bijections and all sign flips. Test
// oracle; throws CapacityError above kBruteForceMaxVertices.
inline constexpr std::size_t kBruteForceMaxVertices = 6;
bool brute_force_isomorphic(const Graph& a, const Graph& b);

// Correspondence between two equivalent graphs, up to sign flips.
struct Isomorphism {
  std::map<VertexId, VertexId> vertices;
  std::map<EdgeEnd, EdgeEnd> ends;
};

std::optional<Isomorphism> find_isomorphism(const Graph& from, const Graph& to,
                                            const CanonOptions& options = {});

}  // namespace gbs

#endif  // GBS_CANON_HPP_
