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

// The two-vertex example family, its four-step deformation, the slide
// ladder certificate, and randomized rigidity trials.
//
// For nonzero m, n, r, s:
//   X    : loop l at A with indices (mnr, r); edge t from A (rm^2) to B (s).
//   Y    : loop l at B with indices (mns, s); edge t from B (sn^2) to A (r).
//   X_k  : X with t's index at A replaced by r m^(k+2) n^k.
// When m and n do not divide each other, the slide class of X is the ray
// X_0 - X_1 - X_2 - ... and never contains Y.

#ifndef GBS_PAPERLAB_HPP_
#define GBS_PAPERLAB_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gbs/canon.hpp"
#include "gbs/graph.hpp"
#include "gbs/moves.hpp"

namespace gbs {

struct PaperParams {
  Index m, n, r, s;

  // m does not divide n and n does not divide m.
  bool coprime_like() const;
  // |r| >= 2 and |s| >= 2.
  bool nontrivial_ends() const;
};

enum class PaperGraph { kX, kY, kXk };

// Throws Error when a parameter is zero.
Graph paper_graph(PaperGraph which, const PaperParams& p, std::size_t k = 0);

struct DeformationReport {
  std::vector<Move> script;  // expand, slide, slide, collapse
  // Index tuples of the graphs after each step; ends listed edge by edge in
  // the order l, f, t, each edge's ends in vertex order A, Q, B (loops:
  // side 0 first).
  std::vector<std::vector<Index>> index_tuples;
  Graph endpoint = Graph::point();
  bool reaches_y = false;
};

// Throws Error on zero parameters and std::logic_error if a step is illegal.
DeformationReport paper_deformation(const PaperParams& p);
std::string format_deformation(const DeformationReport& r);

struct LadderLevel {
  std::size_t k = 0;
  Index free_index;      // t's index at A on the level graph
  Index expected_index;  // r m^(k+2) n^k
  std::size_t slide_count = 0;
  std::vector<CanonicalCertificate> neighbors;
  bool ok = false;
  std::string problem;
};

struct LadderCertificate {
  std::size_t depth = 0;
  std::vector<LadderLevel> levels;
  bool shape_ok = false;
  bool y_absent = false;
};

// Checks levels 0..depth: exact slide neighbour sets {X_(k-1), X_(k+1)},
// the index formula, and that Y differs from every level and neighbour.
// Throws Error if m | n or n | m.
LadderCertificate verify_slide_ladder(const PaperParams& p, std::size_t depth);
std::string format_ladder(const LadderCertificate& c);

enum class Requirement { kNone, kReduced, kStronglySlideFree };

struct RandomGraphSpec {
  std::size_t num_vertices = 2;
  std::size_t num_edges = 1;
  // Indices are drawn from +-[index_lo, index_hi].
  std::int64_t index_lo = 1;
  std::int64_t index_hi = 9;
  Requirement require = Requirement::kNone;
  std::size_t max_retries = 10000;
};

// Vertices v0.., edges e0..; connected via a random spanning tree plus extra
// edges (loops and parallel edges allowed). Deterministic in the seed.
// Throws Error when no graph meets the request.
Graph random_graph(const RandomGraphSpec& spec, std::uint64_t seed);

struct TrialResult {
  bool pass = false;
  std::uint64_t seed = 0;
  Graph start = Graph::point();
  std::vector<Move> moves;
  Graph finish = Graph::point();  // after the random moves
  Reduction reduction{Graph::point(), {}};
  std::string note;
};

// Draws a strongly slide-free reduced graph, applies num_moves random legal
// moves (slides, collapses, expansions weighted 2:1:1), reduces, and passes
// iff the reduced graph is equivalent to the start.
TrialResult rigidity_trial(const RandomGraphSpec& spec, std::size_t num_moves,
                           std::uint64_t seed,
                           const ExpansionBounds& bounds = {9, 3});
std::string format_trial(const TrialResult& t);

struct RigidityCampaign {
  std::size_t trials = 100;
  std::uint64_t first_seed = 1;
  std::size_t max_vertices = 5;
  std::int64_t index_lo = 2;
  std::int64_t index_hi = 9;
  std::size_t num_moves = 8;
  ExpansionBounds bounds{9, 3};
};

// Trial i uses seed first_seed + i; its vertex count is drawn from
// [1, max_vertices] and its edge count from [max(V-1, 1), V+1]. Results are
// in seed order whatever the job count.
std::vector<TrialResult> run_rigidity_campaign(const RigidityCampaign& c,
                                               unsigned jobs = 1);

}  // namespace gbs

#endif  // GBS_PAPERLAB_HPP_
