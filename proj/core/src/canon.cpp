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

#include "gbs/canon.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace gbs {
namespace {

// Ends are described by the rank of |index| among all distinct absolute
// values in the graph; that order is isomorphism-invariant and lets the
// search compare small integers instead of big ones.
struct WorkEdge {
  std::size_t v0, v1;
  int abs_rank0, abs_rank1;
  bool neg0, neg1;
  const Edge* source;
};

struct WorkGraph {
  std::size_t n = 0;
  std::vector<WorkEdge> edges;
  std::vector<std::vector<std::size_t>> incident;  // edge ids per vertex
};

WorkGraph build_work_graph(const Graph& g) {
  WorkGraph w;
  w.n = g.num_vertices();
  w.incident.resize(w.n);
  std::vector<Index> abs_values;
  for (const Edge& e : g.edges()) {
    abs_values.push_back(abs_index(e.index0));
    abs_values.push_back(abs_index(e.index1));
  }
  std::sort(abs_values.begin(), abs_values.end());
  abs_values.erase(std::unique(abs_values.begin(), abs_values.end()),
                   abs_values.end());
  auto abs_rank = [&](const Index& i) {
    return static_cast<int>(std::lower_bound(abs_values.begin(),
                                             abs_values.end(), abs_index(i)) -
                            abs_values.begin());
  };
  auto vertex_rank = [&](const VertexId& v) {
    return static_cast<std::size_t>(
        std::lower_bound(g.vertices().begin(), g.vertices().end(), v) -
        g.vertices().begin());
  };
  for (const Edge& e : g.edges()) {
    WorkEdge we{vertex_rank(e.endpoint0), vertex_rank(e.endpoint1),
                abs_rank(e.index0),       abs_rank(e.index1),
                e.index0 < 0,             e.index1 < 0,
                &e};
    w.incident[we.v0].push_back(w.edges.size());
    if (we.v1 != we.v0) w.incident[we.v1].push_back(w.edges.size());
    w.edges.push_back(we);
  }
  return w;
}

using Coloring = std::vector<int>;

int count_colors(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Replaces colours by the rank of (old colour, neighbourhood signature)
// until the partition is stable.
void refine(const WorkGraph& w, Coloring& colors) {
  using Signature = std::tuple<int, std::vector<std::tuple<int, int, int>>,
                               std::vector<std::pair<int, int>>>;
  int num_colors = count_colors(colors);
  while (true) {
    std::vector<Signature> sigs(w.n);
    for (std::size_t v = 0; v < w.n; ++v) {
      auto& [color, links, loops] = sigs[v];
      color = colors[v];
      for (std::size_t ei : w.incident[v]) {
        const WorkEdge& e = w.edges[ei];
        if (e.v0 == e.v1) {
          loops.emplace_back(std::min(e.abs_rank0, e.abs_rank1),
                             std::max(e.abs_rank0, e.abs_rank1));
        } else if (e.v0 == v) {
          links.emplace_back(colors[e.v1], e.abs_rank0, e.abs_rank1);
        } else {
          links.emplace_back(colors[e.v0], e.abs_rank1, e.abs_rank0);
        }
      }
      std::sort(links.begin(), links.end());
      std::sort(loops.begin(), loops.end());
    }
    std::vector<Signature> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (std::size_t v = 0; v < w.n; ++v) {
      colors[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) -
          distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == num_colors) return;
    num_colors = next;
  }
}

Coloring individualize(const Coloring& colors, std::size_t v) {
  Coloring out(colors.size());
  for (std::size_t u = 0; u < colors.size(); ++u) {
    out[u] = 2 * colors[u] + (u == v ? 0 : 1);
  }
  std::vector<int> distinct = out;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int& c : out) {
    c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) -
                         distinct.begin());
  }
  return out;
}

// Comparison key of one encoded edge.
struct Code {
  std::size_t rank0, rank1;
  int abs0;
  bool neg0;
  int abs1;
  bool neg1;

  auto key() const { return std::tie(rank0, rank1, abs0, neg0, abs1, neg1); }
  friend bool operator<(const Code& a, const Code& b) { return a.key() < b.key(); }
  friend bool operator==(const Code& a, const Code& b) {
    return a.key() == b.key();
  }
};

struct Placed {
  Code code;
  std::size_t edge;
  int first_side;  // side of the source edge placed in the first slot
};

// Union-find carrying the parity between a vertex and its root; used to
// choose vertex sign flips.
class ParitySets {
 public:
  explicit ParitySets(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }
  // Requests flip(a) xor flip(b) == want. Returns the parity actually in
  // force, which differs from want only if a and b were already linked.
  int link(std::size_t a, std::size_t b, int want) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return pa ^ pb;
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ want;
    return want;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

// Least encoding for a fixed vertex ranking. Loops are normalised on their
// own; for other edges the vertex flips form a gauge, and a greedy pass over
// the edges in encoding order yields the least sign pattern.
std::vector<Placed> encode(const WorkGraph& w, const Coloring& rank) {
  std::vector<Placed> placed;
  placed.reserve(w.edges.size());

  struct Link {
    std::size_t low, high;
    int abs_low, abs_high;
    bool mixed;  // exactly one of the two indices is negative
    std::size_t edge;
    int low_side;
  };
  std::vector<Link> links;

  for (std::size_t ei = 0; ei < w.edges.size(); ++ei) {
    const WorkEdge& e = w.edges[ei];
    if (e.v0 == e.v1) {
      const std::size_t r = static_cast<std::size_t>(rank[e.v0]);
      // Try both edge-level sign choices, then order the pair.
      Placed best{};
      for (int flip = 0; flip < 2; ++flip) {
        const bool n0 = e.neg0 != (flip == 1);
        const bool n1 = e.neg1 != (flip == 1);
        const bool swap = std::tie(e.abs_rank1, n1) < std::tie(e.abs_rank0, n0);
        Placed p{swap ? Code{r, r, e.abs_rank1, n1, e.abs_rank0, n0}
                      : Code{r, r, e.abs_rank0, n0, e.abs_rank1, n1},
                 ei, swap ? 1 : 0};
        if (flip == 0 || p.code < best.code) best = p;
      }
      placed.push_back(best);
      continue;
    }
    const bool first_low = rank[e.v0] < rank[e.v1];
    links.push_back(Link{
        static_cast<std::size_t>(first_low ? rank[e.v0] : rank[e.v1]),
        static_cast<std::size_t>(first_low ? rank[e.v1] : rank[e.v0]),
        first_low ? e.abs_rank0 : e.abs_rank1,
        first_low ? e.abs_rank1 : e.abs_rank0, e.neg0 != e.neg1, ei,
        first_low ? 0 : 1});
  }

  std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
    return std::tie(a.low, a.high, a.abs_low, a.abs_high, a.edge) <
           std::tie(b.low, b.high, b.abs_low, b.abs_high, b.edge);
  });

  // Parallel links with equal absolute data form one unit: they share both
  // endpoints, so one gauge bit flips them together. Make the majority
  // positive; a tie leaves the unit indifferent.
  ParitySets gauge(w.n);
  for (std::size_t i = 0; i < links.size();) {
    std::size_t j = i;
    int mixed = 0;
    while (j < links.size() &&
           std::tie(links[j].low, links[j].high, links[j].abs_low,
                    links[j].abs_high) == std::tie(links[i].low, links[i].high,
                                                   links[i].abs_low,
                                                   links[i].abs_high)) {
      mixed += links[j].mixed ? 1 : 0;
      ++j;
    }
    const int plain = static_cast<int>(j - i) - mixed;
    if (plain != mixed) {
      gauge.link(links[i].low, links[i].high, plain > mixed ? 0 : 1);
    }
    i = j;
  }

  for (const Link& l : links) {
    const int flipped = gauge.find(l.low).second ^ gauge.find(l.high).second;
    placed.push_back(Placed{Code{l.low, l.high, l.abs_low, false, l.abs_high,
                                 l.mixed != (flipped == 1)},
                            l.edge, l.low_side});
  }

  std::sort(placed.begin(), placed.end(),
            [](const Placed& a, const Placed& b) {
              return std::tie(a.code, a.edge) < std::tie(b.code, b.edge);
            });
  return placed;
}

bool less_encoding(const std::vector<Placed>& a, const std::vector<Placed>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Placed& x, const Placed& y) { return x.code < y.code; });
}

bool same_encoding(const std::vector<Placed>& a, const std::vector<Placed>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Placed& x, const Placed& y) { return x.code == y.code; });
}

// Individualization-refinement search. Two leaves with equal encodings give
// an automorphism; siblings in one orbit of the automorphisms found so far
// that fix the current path have equal subtrees, so only one is searched.
class LabelSearch {
 public:
  explicit LabelSearch(const WorkGraph& w) : w_(w) {}

  void run() {
    Coloring colors(w_.n, 0);
    visit(std::move(colors));
  }

  const Coloring& best_ranking() const { return best_rank_; }
  const std::vector<Placed>& best_encoding() const { return best_; }

 private:
  using Perm = std::vector<std::size_t>;

  void visit(Coloring colors) {
    refine(w_, colors);
    const int num_colors = count_colors(colors);
    if (static_cast<std::size_t>(num_colors) == w_.n) {
      leaf(colors);
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<int> cell_size(static_cast<std::size_t>(num_colors), 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = 0;
    while (cell_size[static_cast<std::size_t>(target)] == 1) ++target;
    std::vector<std::size_t> done;
    for (std::size_t v = 0; v < w_.n; ++v) {
      if (colors[v] != target) continue;
      if (!done.empty() && in_explored_orbit(v, done)) continue;
      path_.push_back(v);
      visit(individualize(colors, v));
      path_.pop_back();
      done.push_back(v);
    }
  }

  bool in_explored_orbit(std::size_t v, const std::vector<std::size_t>& done) const {
    std::vector<std::size_t> parent(w_.n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& g : autos_) {
      const bool fixes_path = std::all_of(path_.begin(), path_.end(),
                                          [&](std::size_t u) { return g[u] == u; });
      if (!fixes_path) continue;
      for (std::size_t u = 0; u < w_.n; ++u) parent[find(u)] = find(g[u]);
    }
    const std::size_t root = find(v);
    return std::any_of(done.begin(), done.end(),
                       [&](std::size_t u) { return find(u) == root; });
  }

  void add_automorphism(const Coloring& from, const Coloring& to) {
    std::vector<std::size_t> at_rank(w_.n);
    for (std::size_t v = 0; v < w_.n; ++v) {
      at_rank[static_cast<std::size_t>(to[v])] = v;
    }
    Perm g(w_.n);
    bool identity = true;
    for (std::size_t v = 0; v < w_.n; ++v) {
      g[v] = at_rank[static_cast<std::size_t>(from[v])];
      identity = identity && g[v] == v;
    }
    if (!identity) autos_.push_back(std::move(g));
  }

  void leaf(const Coloring& rank) {
    std::vector<Placed> enc = encode(w_, rank);
    if (!have_best_) {
      first_ = enc;
      first_rank_ = rank;
      best_ = std::move(enc);
      best_rank_ = rank;
      have_best_ = true;
      return;
    }
    if (same_encoding(enc, first_)) {
      add_automorphism(first_rank_, rank);
    } else if (same_encoding(enc, best_)) {
      add_automorphism(best_rank_, rank);
    } else if (less_encoding(enc, best_)) {
      best_ = std::move(enc);
      best_rank_ = rank;
    }
  }

  const WorkGraph& w_;
  bool have_best_ = false;
  std::vector<Placed> first_;
  Coloring first_rank_;
  std::vector<Placed> best_;
  Coloring best_rank_;
  std::vector<std::size_t> path_;
  std::vector<Perm> autos_;
};

std::string signed_value(const Index& abs_value, bool negative) {
  return (negative ? "-" : "") + abs_value.str();
}

}  // namespace

std::string CanonicalCertificate::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g,
                                     const CanonOptions& options) {
  if (g.num_vertices() > options.max_vertices) {
    throw CapacityError("canonical form limited to " +
                        std::to_string(options.max_vertices) +
                        " vertices; graph has " +
                        std::to_string(g.num_vertices()));
  }
  const WorkGraph w = build_work_graph(g);
  LabelSearch search(w);
  search.run();

  CanonicalLabeling out;
  out.vertex_order.resize(w.n);
  for (std::size_t v = 0; v < w.n; ++v) {
    out.vertex_order[static_cast<std::size_t>(search.best_ranking()[v])] =
        g.vertices()[v];
  }
  std::ostringstream bytes;
  bytes << "gbs1|" << w.n << '|';
  for (const Placed& p : search.best_encoding()) {
    const Edge& e = *w.edges[p.edge].source;
    const Index& first = e.index(p.first_side);
    const Index& second = e.index(1 - p.first_side);
    bytes << p.code.rank0 << ',' << p.code.rank1 << ','
          << signed_value(abs_index(first), p.code.neg0) << ','
          << signed_value(abs_index(second), p.code.neg1) << ';';
    out.edge_slots.push_back({e.id, p.first_side});
  }
  out.certificate.bytes = bytes.str();
  return out;
}

CanonicalCertificate canonical_certificate(const Graph& g,
                                           const CanonOptions& options) {
  return canonical_labeling(g, options).certificate;
}

bool is_isomorphic(const Graph& a, const Graph& b, const CanonOptions& options) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    // Still enforce the cap so callers see consistent errors.
    if (a.num_vertices() > options.max_vertices ||
        b.num_vertices() > options.max_vertices) {
      throw CapacityError("canonical form limited to " +
                          std::to_string(options.max_vertices) + " vertices");
    }
    return false;
  }
  return canonical_certificate(a, options) == canonical_certificate(b, options);
}

std::optional<Isomorphism> find_isomorphism(const Graph& from, const Graph& to,
                                            const CanonOptions& options) {
  const CanonicalLabeling lf = canonical_labeling(from, options);
  const CanonicalLabeling lt = canonical_labeling(to, options);
  if (lf.certificate != lt.certificate) return std::nullopt;
  Isomorphism iso;
  for (std::size_t r = 0; r < lf.vertex_order.size(); ++r) {
    iso.vertices[lf.vertex_order[r]] = lt.vertex_order[r];
  }
  for (std::size_t k = 0; k < lf.edge_slots.size(); ++k) {
    iso.ends[lf.edge_slots[k]] = lt.edge_slots[k];
    iso.ends[lf.edge_slots[k].opposite()] = lt.edge_slots[k].opposite();
  }
  return iso;
}

// ---------------------------------------------------------------------------
// Brute force: every bijection, every vertex flip, and for each edge both
// edge flips and both orientations.

namespace {

using RawEdge = std::tuple<std::size_t, std::size_t, Index, Index>;

RawEdge orbit_min(std::size_t u, std::size_t v, const Index& a, const Index& b) {
  RawEdge best{u, v, a, b};
  for (RawEdge cand : {RawEdge{u, v, -a, -b}, RawEdge{v, u, b, a},
                       RawEdge{v, u, -b, -a}}) {
    if (cand < best) best = cand;
  }
  return best;
}

std::size_t position(const Graph& g, const VertexId& v) {
  return static_cast<std::size_t>(
      std::lower_bound(g.vertices().begin(), g.vertices().end(), v) -
      g.vertices().begin());
}

}  // namespace

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() > kBruteForceMaxVertices ||
      b.num_vertices() > kBruteForceMaxVertices) {
    throw CapacityError("brute-force isomorphism limited to " +
                        std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  const std::size_t n = a.num_vertices();

  std::vector<RawEdge> target;
  for (const Edge& e : b.edges()) {
    target.push_back(orbit_min(position(b, e.endpoint0), position(b, e.endpoint1),
                               e.index0, e.index1));
  }
  std::sort(target.begin(), target.end());

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<RawEdge> image;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      image.clear();
      for (const Edge& e : a.edges()) {
        const std::size_t u = position(a, e.endpoint0);
        const std::size_t v = position(a, e.endpoint1);
        const Index x = (mask >> u & 1) ? Index(-e.index0) : e.index0;
        const Index y = (mask >> v & 1) ? Index(-e.index1) : e.index1;
        image.push_back(orbit_min(perm[u], perm[v], x, y));
      }
      std::sort(image.begin(), image.end());
      if (image == target) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gbs
