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

// Collapse, expansion and slide moves on edge-indexed graphs, and the
// predicates built from them.
//
// Collapse {e, S}: e is a non-loop edge whose index at the end away from S
// is eps = +-1. That end's vertex D disappears; every other end at D moves
// to S with index k*c*eps, where k is e's index at S and c the old index.
//
// Expansion {V, k, ends, Q, f}: adds vertex Q and edge f = (V:k, Q:1), then
// moves each listed end from V to Q, dividing its index by k.
//
// Slide {moving, along}: both ends sit at one vertex on different edges and
// index(along) divides index(moving). The moving end travels to the far
// end of the carrier edge and its index becomes
// index(moving) / index(along) * (carrier's far index).

#ifndef GBS_MOVES_HPP_
#define GBS_MOVES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

struct Collapse {
  EdgeId edge;
  VertexId survivor;
  friend bool operator==(const Collapse&, const Collapse&) = default;
};

struct Expansion {
  VertexId vertex;
  Index n;
  std::vector<EdgeEnd> moved_ends;
  VertexId new_vertex;
  EdgeId new_edge;
  friend bool operator==(const Expansion&, const Expansion&) = default;
};

struct Slide {
  EdgeEnd moving;
  EdgeEnd along;  // carrier end at the shared vertex
  friend bool operator==(const Slide&, const Slide&) = default;
};

using Move = std::variant<Collapse, Expansion, Slide>;

// Throws MoveError naming the violated precondition.
void check_move(const Graph& g, const Move& m);
bool is_legal(const Graph& g, const Move& m);

Graph apply_move(const Graph& g, const Move& m);
Graph apply_script(const Graph& g, const std::vector<Move>& script);

// A move legal on apply_move(g, m) that undoes m up to sign flips (exactly,
// when no sign change was absorbed and orientations agree).
Move invert_move(const Graph& g, const Move& m);

// Sorted by edge id, then survivor.
std::vector<Move> enumerate_collapses(const Graph& g);
// Sorted by (moving end, carrier end).
std::vector<Move> enumerate_slides(const Graph& g);

struct ExpansionBounds {
  Index max_n = 10;
  std::size_t max_subset_size = 3;
};

// Expansions with 2 <= n <= max_n over nonempty end subsets of size at most
// max_subset_size. Fresh ids come from fresh_vertex_id / fresh_edge_id.
std::vector<Move> enumerate_expansions(const Graph& g,
                                       const ExpansionBounds& bounds = {});

// "v<k>" / "e<k>" with the smallest k >= 1 not already used.
VertexId fresh_vertex_id(const Graph& g);
EdgeId fresh_edge_id(const Graph& g);

enum class Geometry { kPoint, kLine, kGeneral };
const char* to_string(Geometry g);

enum class JsjStatus { kQualified, kNotQualified, kUnknown };

struct JsjVerdict {
  JsjStatus status = JsjStatus::kUnknown;
  std::string reason;  // empty when qualified
};

std::string to_string(const JsjVerdict& v);

struct PredicateReport {
  bool reduced = false;
  bool minimal = false;
  bool strongly_slide_free = false;
  bool unfolded_sufficient = false;
  Geometry geometry = Geometry::kGeneral;
  JsjVerdict jsj;
};

PredicateReport analyze(const Graph& g);
// key: value lines.
std::string format_report(const PredicateReport& r);

struct Reduction {
  Graph graph;
  std::vector<Move> script;
};

// Applies the first enumerated collapse until none remain.
Reduction reduce(const Graph& g);

// Move script text, one move per line.
std::string to_script_line(const Move& m);
std::string format_script(const std::vector<Move>& script);
// Blank lines and '#' comments are skipped. Throws ScriptError.
std::vector<Move> parse_script(std::string_view text);

}  // namespace gbs

#endif  // GBS_MOVES_HPP_
