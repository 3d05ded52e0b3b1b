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

#include <cstdint>
#include <set>

#include <gtest/gtest.h>

#include "gbs/canon.hpp"
#include "gbs/error.hpp"
#include "testing.hpp"

namespace gbs {
namespace {

using testing::scramble;
using testing::X;
using testing::Y;

TEST(Canon, Examples) {
  EXPECT_FALSE(is_isomorphic(X(), Y()));
  EXPECT_TRUE(is_isomorphic(X(), scramble(X(), 3)));
  EXPECT_FALSE(is_isomorphic(Graph::point(), testing::loop(1, 1)));
  EXPECT_FALSE(brute_force_isomorphic(X(), Y()));
  EXPECT_TRUE(brute_force_isomorphic(X(), scramble(X(), 3)));
  EXPECT_FALSE(brute_force_isomorphic(Graph::point(), testing::loop(1, 1)));
}

TEST(Canon, CertificateText) {
  const CanonicalCertificate c = canonical_certificate(Graph::point());
  EXPECT_EQ(c.bytes.rfind("gbs1|1|", 0), 0u);
  EXPECT_EQ(c.hex().size(), 2 * c.bytes.size());
  EXPECT_EQ(c.hex().substr(0, 8), "67627331");
}

TEST(Canon, SignsAreQuotiented) {
  EXPECT_TRUE(is_isomorphic(testing::loop(2, -3), testing::loop(-2, 3)));
  EXPECT_TRUE(is_isomorphic(testing::loop(2, 3), testing::loop(-2, -3)));
  EXPECT_FALSE(is_isomorphic(testing::loop(2, 3), testing::loop(2, -3)));
  EXPECT_TRUE(is_isomorphic(testing::loop(2, 3), testing::loop(3, 2)));
}

TEST(Canon, ParallelEdgesAndParity) {
  // Two parallel edges: the relative sign of the two edges is invariant.
  const Graph a({"A", "B"}, {{"e", "A", "B", 2, 3}, {"f", "A", "B", 2, 3}});
  const Graph b({"A", "B"}, {{"e", "A", "B", 2, 3}, {"f", "A", "B", -2, 3}});
  const Graph c({"A", "B"}, {{"e", "A", "B", -2, -3}, {"f", "B", "A", 3, 2}});
  EXPECT_FALSE(is_isomorphic(a, b));
  EXPECT_TRUE(is_isomorphic(a, c));
  EXPECT_EQ(is_isomorphic(a, b), brute_force_isomorphic(a, b));
  EXPECT_EQ(is_isomorphic(a, c), brute_force_isomorphic(a, c));
}

TEST(Canon, CapacityIsEnforced) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 0; i < 14; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 1; i < 14; ++i) {
    es.push_back({"e" + std::to_string(i), "v0", "v" + std::to_string(i), 2, 3});
  }
  const Graph star(vs, es);
  EXPECT_THROW(canonical_certificate(star), CapacityError);
  EXPECT_NO_THROW(canonical_certificate(star, {20}));
  EXPECT_THROW(brute_force_isomorphic(star, star), CapacityError);
}

TEST(Canon, PropertyScrambleInvariant) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph g = testing::random_small(seed, 7);
    const Graph h = scramble(g, seed + 1000);
    EXPECT_EQ(canonical_certificate(g), canonical_certificate(h))
        << serialize_graph(g) << "--\n" << serialize_graph(h);
  }
}

TEST(Canon, PropertyAgreesWithOracle) {
  std::size_t positives = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph g = testing::random_small(seed, 5, 1, 4);
    const Graph h = testing::random_small(seed + 77, 5, 1, 4);
    const Graph g2 = scramble(g, seed);
    EXPECT_TRUE(brute_force_isomorphic(g, g2));
    EXPECT_TRUE(is_isomorphic(g, g2));
    const bool fast = is_isomorphic(g, h);
    positives += fast;
    EXPECT_EQ(fast, brute_force_isomorphic(g, h))
        << serialize_graph(g) << "--\n" << serialize_graph(h);
  }
  // Tiny graphs over {1, 2} collide often, so both answers get exercised.
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Graph g = testing::random_small(seed, 2, 1, 2);
    const Graph h = testing::random_small(seed + 500, 2, 1, 2);
    const bool fast = is_isomorphic(g, h);
    positives += fast;
    EXPECT_EQ(fast, brute_force_isomorphic(g, h))
        << serialize_graph(g) << "--\n" << serialize_graph(h);
  }
  EXPECT_GT(positives, 5u);
}

TEST(Canon, PropertyNearMissesAreSeparated) {
  // Negating a single end changes the class exactly when the oracle says so.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph g = testing::random_small(seed, 5, 1, 6);
    if (g.num_edges() == 0) continue;
    std::vector<Edge> edges = g.edges();
    edges[seed % edges.size()].index1 *= -1;
    const Graph h(g.vertices(), edges);
    EXPECT_EQ(is_isomorphic(g, h), brute_force_isomorphic(g, h))
        << serialize_graph(g) << "--\n" << serialize_graph(h);
  }
}

Graph cycle(std::size_t n, long a, long b) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    es.push_back({"k" + std::to_string(i), vs[i], vs[(i + 1) % n], a, b});
  }
  return Graph(vs, es);
}

TEST(Canon, SymmetricGraphsStayFast) {
  // Without automorphism pruning these take n! leaves.
  std::vector<VertexId> vs = {"hub"};
  std::vector<Edge> es;
  for (int i = 0; i < 11; ++i) {
    vs.push_back("l" + std::to_string(i));
    es.push_back({"s" + std::to_string(i), "hub", vs.back(), 2, 3});
  }
  const Graph star(vs, es);
  EXPECT_TRUE(is_isomorphic(star, scramble(star, 1)));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph c = cycle(12, 2, 2);
    EXPECT_EQ(canonical_certificate(c), canonical_certificate(scramble(c, seed)));
  }
  // Reversing the cycle swaps the two indices of every edge.
  EXPECT_TRUE(is_isomorphic(cycle(12, 2, 3), cycle(12, 3, 2)));
  // Vertex flips change the number of sign-mixed edges on a cycle by an
  // even amount.
  EXPECT_TRUE(is_isomorphic(cycle(12, 2, 3), cycle(12, 2, -3)));
  EXPECT_FALSE(is_isomorphic(cycle(11, 2, 3), cycle(11, 2, -3)));
}

TEST(Canon, PropertyPruningAgreesWithOracleOnSymmetricGraphs) {
  for (long a : {1, 2}) {
    for (long b : {1, 2, -2}) {
      const Graph c = cycle(6, a, b);
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Graph h = scramble(c, seed);
        EXPECT_TRUE(is_isomorphic(c, h));
        std::vector<Edge> edges = h.edges();
        edges[seed % edges.size()].index0 *= -1;
        const Graph bent(h.vertices(), edges);
        EXPECT_EQ(is_isomorphic(c, bent), brute_force_isomorphic(c, bent)) << a << b << seed;
      }
    }
  }
}

TEST(FindIsomorphism, MapsEndsToEqualAbsoluteIndices) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = testing::random_small(seed);
    const Graph h = scramble(g, seed * 3);
    const auto iso = find_isomorphism(g, h);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(iso->vertices.size(), g.num_vertices());
    EXPECT_EQ(iso->ends.size(), 2 * g.num_edges());
    std::set<EdgeEnd> images;
    for (const auto& [from, to] : iso->ends) {
      EXPECT_EQ(abs_index(g.index_of(from)), abs_index(h.index_of(to)));
      EXPECT_EQ(iso->vertices.at(g.vertex_of(from)), h.vertex_of(to));
      EXPECT_EQ(iso->ends.at(from.opposite()), to.opposite());
      images.insert(to);
    }
    EXPECT_EQ(images.size(), iso->ends.size());
  }
  EXPECT_FALSE(find_isomorphism(X(), Y()).has_value());
}

}  // namespace
}  // namespace gbs
