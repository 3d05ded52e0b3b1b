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

#ifndef GBS_TESTS_TESTING_HPP_
#define GBS_TESTS_TESTING_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/moves.hpp"
#include "gbs/paperlab.hpp"

namespace gbs::testing {

inline const PaperParams kParams{2, 3, 5, 7};

inline Graph X() { return paper_graph(PaperGraph::kX, kParams); }
inline Graph Y() { return paper_graph(PaperGraph::kY, kParams); }

inline Graph loop(long a, long b) {
  return Graph({"A"}, {{"e", "A", "A", a, b}});
}

inline Graph diagram4() {
  return Graph({"A", "B", "Q"}, {{"l", "A", "Q", 5, 3},
                                 {"f", "Q", "B", 1, 21},
                                 {"t", "Q", "B", 2, 7}});
}

inline std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

// Renames every id, reverses random edges and applies random sign flips.
inline Graph scramble(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> vperm(g.num_vertices());
  std::iota(vperm.begin(), vperm.end(), 0);
  for (std::size_t i = vperm.size(); i > 1; --i) std::swap(vperm[i - 1], vperm[below(rng, i)]);
  std::map<VertexId, VertexId> vname;
  for (std::size_t i = 0; i < vperm.size(); ++i) {
    vname[g.vertices()[i]] = "w" + std::to_string(vperm[i]);
  }
  std::vector<VertexId> vertices;
  for (const auto& [from, to] : vname) vertices.push_back(to);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (const Edge& e : g.edges()) {
    Edge c{"x" + std::to_string(g.num_edges() - k++), vname[e.endpoint0],
           vname[e.endpoint1], e.index0, e.index1};
    if (below(rng, 2)) {
      std::swap(c.endpoint0, c.endpoint1);
      std::swap(c.index0, c.index1);
    }
    edges.push_back(std::move(c));
  }
  SignFlip flip;
  for (const VertexId& v : vertices) {
    if (below(rng, 2)) flip.vertex_flips.insert(v);
  }
  for (const Edge& e : edges) {
    if (below(rng, 2)) flip.edge_flips.insert(e.id);
  }
  return apply_sign_flips(Graph(std::move(vertices), std::move(edges)), flip);
}

// Random graph with 1..max_vertices vertices and up to two extra edges.
inline Graph random_small(std::uint64_t seed, std::size_t max_vertices = 5,
                          std::int64_t lo = 1, std::int64_t hi = 9) {
  std::mt19937_64 rng(seed * 7919 + 13);
  RandomGraphSpec spec;
  spec.num_vertices = 1 + below(rng, max_vertices);
  spec.num_edges = std::max<std::size_t>(spec.num_vertices - 1, 1) + below(rng, 3);
  spec.index_lo = lo;
  spec.index_hi = hi;
  return random_graph(spec, seed);
}

inline std::vector<Move> all_moves(const Graph& g, const ExpansionBounds& b = {6, 2}) {
  std::vector<Move> out = enumerate_collapses(g);
  for (auto& m : enumerate_slides(g)) out.push_back(std::move(m));
  for (auto& m : enumerate_expansions(g, b)) out.push_back(std::move(m));
  return out;
}

}  // namespace gbs::testing

#endif  // GBS_TESTS_TESTING_HPP_
