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

// Edge-indexed graphs: connected multigraphs carrying a nonzero integer at
// each end of each edge. Every edge record stands for a pair of opposite
// oriented edges; side 0 is the end at endpoint0, side 1 the end at
// endpoint1. Loops and parallel edges are allowed.

#ifndef GBS_GRAPH_HPP_
#define GBS_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/error.hpp"
#include "gbs/index.hpp"

namespace gbs {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId endpoint0;
  VertexId endpoint1;
  Index index0;
  Index index1;

  bool is_loop() const { return endpoint0 == endpoint1; }
  const VertexId& endpoint(int side) const {
    return side == 0 ? endpoint0 : endpoint1;
  }
  const Index& index(int side) const { return side == 0 ? index0 : index1; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Names one end of a geometric edge.
struct EdgeEnd {
  EdgeId edge;
  int side = 0;

  EdgeEnd opposite() const { return {edge, 1 - side}; }

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

std::string to_string(const EdgeEnd& end);  // "edge:side"

// Negates index(end) once if vertex(end) is in vertex_flips and once if the
// end's edge is in edge_flips.
struct SignFlip {
  std::set<VertexId> vertex_flips;
  std::set<EdgeId> edge_flips;
};

// Immutable after construction. Vertices and edges are kept sorted by id,
// so iteration order and equality depend only on the id-keyed content.
class Graph {
 public:
  // Validates ids, endpoints, nonzero indices and connectivity.
  // Throws GraphError on the first violation.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  static Graph point(VertexId v = "A");

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(std::string_view v) const;
  bool has_edge(std::string_view e) const;
  // Throws GraphError(kUnknownId) when absent.
  const Edge& edge(std::string_view e) const;

  bool has_end(const EdgeEnd& end) const;
  const VertexId& vertex_of(const EdgeEnd& end) const;
  const Index& index_of(const EdgeEnd& end) const;

  // All ends attached to v, in (edge id, side) order. A loop contributes two.
  std::vector<EdgeEnd> ends_at(std::string_view v) const;
  std::size_t valence(std::string_view v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

// |E| - |V| + 1.
long betti_number(const Graph& g);

Graph apply_sign_flips(const Graph& g, const SignFlip& s);

bool is_valid_ident(std::string_view s);

// .gbs text format.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Graphviz rendering; each geometric edge is labelled "index0|index1".
std::string to_dot(const Graph& g, std::string_view name = "gbs");

}  // namespace gbs

#endif  // GBS_GRAPH_HPP_
