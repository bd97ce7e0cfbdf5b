// Copyright 2026 The linspp Authors.
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

// Acyclic digraphs with a designated source and sink.
//
// A Dag is a view onto an immutable arc universe: the arcs passed to
// Dag::Build receive ids 1..m and keep them for every graph derived from it
// (coverage pruning, prefix restriction). Derived graphs only switch arcs and
// vertices off, so interaction costs keyed by arc id stay meaningful across
// the whole recursion of the linearization algorithm.

#ifndef LINSPP_GRAPH_H_
#define LINSPP_GRAPH_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "linspp/arc_set.h"

namespace linspp {

struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
};

// A path given as its starting vertex and arc sequence. An empty arc list is
// the trivial path at `from`.
struct Path {
  VertexId from = kNoVertex;
  std::vector<ArcId> arcs;

  friend bool operator==(const Path&, const Path&) = default;
};

class Dag {
 public:
  // Arc i of `arcs` receives id i + 1. Throws Error with kSourceEqualsSink,
  // kDanglingVertexReference or kCycleDetected.
  static Dag Build(int vertex_count, std::span<const Arc> arcs,
                   VertexId source, VertexId sink);

  // Universe sizes; ids range over [0, vertex_count) and [1, arc_universe].
  int vertex_count() const { return vertex_count_; }
  int arc_universe() const { return static_cast<int>(universe_->size()); }

  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }

  // Active arcs, ascending by id.
  std::span<const ArcId> arcs() const { return active_arcs_; }
  int arc_count() const { return static_cast<int>(active_arcs_.size()); }
  // Active vertices in topological order, ties broken by vertex id.
  std::span<const VertexId> vertices() const { return topo_order_; }

  const Arc& arc(ArcId id) const { return (*universe_)[id - 1]; }
  bool has_arc(ArcId id) const {
    return id >= 1 && id <= universe_->size() && arc_active_[id] != 0;
  }
  bool has_vertex(VertexId v) const {
    return v >= 0 && v < vertex_count_ && vertex_active_[v] != 0;
  }
  // Position of an active vertex in vertices().
  int topo_index(VertexId v) const { return topo_index_[v]; }

  // Active arcs leaving / entering `v`, ascending by id.
  std::span<const ArcId> out_arcs(VertexId v) const {
    return {out_list_.data() + out_begin_[v],
            out_list_.data() + out_begin_[v + 1]};
  }
  std::span<const ArcId> in_arcs(VertexId v) const {
    return {in_list_.data() + in_begin_[v], in_list_.data() + in_begin_[v + 1]};
  }

  // True when every active arc lies on a source-sink path.
  bool covered() const { return covered_; }

  // Subgraph on the given arc mask (indexed by arc id) with a new sink. The
  // vertex set is the set of endpoints of selected arcs plus source and sink.
  Dag WithArcs(const std::vector<char>& arc_mask, VertexId sink,
               bool covered) const;

 private:
  Dag() = default;
  void Index(const std::vector<char>& arc_mask);

  std::shared_ptr<const std::vector<Arc>> universe_;
  int vertex_count_ = 0;
  VertexId source_ = kNoVertex;
  VertexId sink_ = kNoVertex;
  bool covered_ = false;

  std::vector<char> arc_active_;     // by arc id, slot 0 unused
  std::vector<char> vertex_active_;  // by vertex id
  std::vector<ArcId> active_arcs_;
  std::vector<VertexId> topo_order_;
  std::vector<int> topo_index_;
  std::vector<int> out_begin_;
  std::vector<ArcId> out_list_;
  std::vector<int> in_begin_;
  std::vector<ArcId> in_list_;
};

// Total order on arcs consistent with arc succession along every path.
struct ArcOrder {
  std::vector<ArcId> order;
};

// One outgoing "nonbasic" arc for every vertex other than source and sink.
// The chosen arcs form an in-tree rooted at the sink.
class NonbasicSystem {
 public:
  NonbasicSystem() = default;

  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }

  // Nonbasic arc leaving `v`, or kNoArc for source, sink and inactive vertices.
  ArcId nonbasic_of(VertexId v) const { return nonbasic_of_[v]; }
  bool is_nonbasic(ArcId a) const { return is_nonbasic_[a] != 0; }
  // Number of nonbasic arcs, |V| - 2 on a covered graph.
  int size() const { return size_; }

 private:
  friend NonbasicSystem ChooseNonbasicSystem(const Dag& dag);

  VertexId source_ = kNoVertex;
  VertexId sink_ = kNoVertex;
  std::vector<ArcId> nonbasic_of_;
  std::vector<char> is_nonbasic_;
  int size_ = 0;
};

// Keeps the arcs lying on at least one source-sink path. Idempotent.
// Throws Error(kNoStPath) if the sink is unreachable.
Dag PruneToCovered(const Dag& dag);

// Arc-id-minimal linear extension of arc succession.
ArcOrder TopologicalArcOrder(const Dag& dag);

// Picks the smallest-id outgoing arc at every inner vertex of a covered graph.
NonbasicSystem ChooseNonbasicSystem(const Dag& dag);

// The unique v-sink path of nonbasic arcs (trivial for v = sink).
// Throws Error(kSourceHasNoNonbasicPath) for the source.
Path NonbasicPath(const Dag& dag, const NonbasicSystem& ns, VertexId v);

// Subgraph of arcs on at least one source-u path, with sink u.
// Throws Error(kVertexUnreachable) if u is not reachable from the source and
// Error(kSourceEqualsSink) for u = source.
Dag RestrictToPrefix(const Dag& dag, VertexId u);

// Number of source-sink paths, saturating at `cap`.
std::uint64_t CountPaths(const Dag& dag, std::uint64_t cap);

// All from-to paths in lexicographic arc-id order. Throws
// Error(kTooManyPaths) when there are more than `limit`.
std::vector<Path> EnumeratePaths(const Dag& dag, VertexId from, VertexId to,
                                 std::uint64_t limit);
inline std::vector<Path> EnumeratePaths(const Dag& dag, std::uint64_t limit) {
  return EnumeratePaths(dag, dag.source(), dag.sink(), limit);
}

// One path from `v` to the sink following smallest-id out arcs.
Path AnyPathToSink(const Dag& dag, VertexId v);

// One path from the source to `v` following smallest-id in arcs.
Path AnyPathFromSource(const Dag& dag, VertexId v);

// P . Q; requires P to end where Q starts.
Path Concat(const Dag& dag, const Path& p, const Path& q);

// Last vertex of `p`.
VertexId PathEnd(const Dag& dag, const Path& p);

// True if `p` is a well-formed path of active arcs in `dag`.
bool IsPath(const Dag& dag, const Path& p);

}  // namespace linspp

#endif  // LINSPP_GRAPH_H_
