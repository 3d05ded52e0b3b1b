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

// Bounded breadth-first search over move graphs. Graphs are identified by
// canonical certificate, so relabelling and sign conventions never split a
// class.

#ifndef GBS_EXPLORE_HPP_
#define GBS_EXPLORE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gbs/canon.hpp"
#include "gbs/graph.hpp"
#include "gbs/moves.hpp"

namespace gbs {

enum class MoveClass {
  kSlide,   // slide moves only
  kDeform,  // collapses, bounded expansions and slides
};

const char* to_string(MoveClass c);

struct Budget {
  std::size_t max_depth = 6;
  std::size_t max_nodes = 100000;
  Index max_abs_index = 1000000;
  ExpansionBounds expansion_bounds;
};

// Moves generated from g under the class, in enumeration order.
std::vector<Move> neighbor_moves(const Graph& g, MoveClass move_class,
                                 const ExpansionBounds& bounds);

Index max_abs_index(const Graph& g);

struct ClassMember {
  CanonicalCertificate certificate;
  Graph representative;
  std::size_t depth = 0;
};

struct ExplorationReport {
  std::vector<ClassMember> members;  // discovery order; members[0] is the start
  // Out-neighbours among members, by member position, sorted.
  std::vector<std::vector<std::size_t>> adjacency;
  // No unexplored neighbour remained: every move from every member leads
  // back into the member set.
  bool closed = false;
  bool touched_index_cap = false;
};

ExplorationReport explore_class(const Graph& g, MoveClass move_class,
                                const Budget& budget);

std::string format_report(const ExplorationReport& r);
// One line per member: hex certificate, a space, then the representative
// in .gbs syntax with ';' in place of newlines.
std::string dump_visited(const ExplorationReport& r);
std::string to_dot(const ExplorationReport& r);

struct Verdict {
  enum class Kind { kEquivalent, kDistinct, kUnknown };
  Kind kind = Kind::kUnknown;
  std::vector<Move> path;  // replays from the first graph when equivalent
  std::string reason;
};

const char* to_string(Verdict::Kind k);
std::string format_verdict(const Verdict& v);

// Invariant refuters first, then bidirectional BFS with the depth budget
// shared between the two sides.
Verdict decide_equivalence(const Graph& g1, const Graph& g2,
                           MoveClass move_class, const Budget& budget);

// Rewrites a move legal on `from` into the corresponding move on `to`,
// given an isomorphism from `from` to `to`. Expansions receive fresh ids
// in `to`.
Move transport_move(const Move& m, const Isomorphism& iso, const Graph& to);

}  // namespace gbs

#endif  // GBS_EXPLORE_HPP_
