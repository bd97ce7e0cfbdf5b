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

#include "linspp/graph.h"

#include <functional>
#include <queue>
#include <string>

#include "linspp/error.h"

namespace linspp {
namespace {

std::vector<char> ForwardReach(const Dag& dag, VertexId from) {
  std::vector<char> seen(dag.vertex_count(), 0);
  seen[from] = 1;
  for (VertexId v : dag.vertices()) {
    if (!seen[v]) continue;
    for (ArcId a : dag.out_arcs(v)) seen[dag.arc(a).head] = 1;
  }
  return seen;
}

std::vector<char> BackwardReach(const Dag& dag, VertexId to) {
  std::vector<char> seen(dag.vertex_count(), 0);
  seen[to] = 1;
  const auto order = dag.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!seen[*it]) continue;
    for (ArcId a : dag.in_arcs(*it)) seen[dag.arc(a).tail] = 1;
  }
  return seen;
}

}  // namespace

Dag Dag::Build(int vertex_count, std::span<const Arc> arcs, VertexId source,
               VertexId sink) {
  if (vertex_count <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  }
  if (arcs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "graph needs at least one arc");
  }
  auto in_range = [&](VertexId v) { return v >= 0 && v < vertex_count; };
  if (!in_range(source) || !in_range(sink)) {
    throw Error(ErrorCode::kDanglingVertexReference,
                "source or sink outside the vertex range");
  }
  if (source == sink) {
    throw Error(ErrorCode::kSourceEqualsSink, "source equals sink");
  }
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (!in_range(arcs[i].tail) || !in_range(arcs[i].head)) {
      throw Error(ErrorCode::kDanglingVertexReference,
                  "arc " + std::to_string(i + 1) +
                      " references a vertex outside the vertex range");
    }
    if (arcs[i].tail == arcs[i].head) {
      throw Error(ErrorCode::kCycleDetected,
                  "arc " + std::to_string(i + 1) + " is a loop");
    }
  }
  Dag dag;
  dag.universe_ = std::make_shared<const std::vector<Arc>>(arcs.begin(),
                                                           arcs.end());
  dag.vertex_count_ = vertex_count;
  dag.source_ = source;
  dag.sink_ = sink;
  std::vector<char> mask(arcs.size() + 1, 1);
  mask[0] = 0;
  dag.vertex_active_.assign(vertex_count, 1);
  dag.Index(mask);
  if (static_cast<int>(dag.topo_order_.size()) != vertex_count) {
    throw Error(ErrorCode::kCycleDetected, "graph contains a directed cycle");
  }
  return dag;
}

Dag Dag::WithArcs(const std::vector<char>& arc_mask, VertexId sink,
                  bool covered) const {
  Dag dag;
  dag.universe_ = universe_;
  dag.vertex_count_ = vertex_count_;
  dag.source_ = source_;
  dag.sink_ = sink;
  dag.covered_ = covered;
  dag.vertex_active_.assign(vertex_count_, 0);
  dag.vertex_active_[source_] = 1;
  dag.vertex_active_[sink] = 1;
  for (size_t id = 1; id < arc_mask.size(); ++id) {
    if (!arc_mask[id]) continue;
    const Arc& a = arc(static_cast<ArcId>(id));
    dag.vertex_active_[a.tail] = 1;
    dag.vertex_active_[a.head] = 1;
  }
  dag.Index(arc_mask);
  return dag;
}

void Dag::Index(const std::vector<char>& arc_mask) {
  const int m = static_cast<int>(universe_->size());
  arc_active_.assign(m + 1, 0);
  active_arcs_.clear();
  std::vector<int> out_degree(vertex_count_ + 1, 0);
  std::vector<int> in_degree(vertex_count_ + 1, 0);
  for (int id = 1; id <= m; ++id) {
    if (id >= static_cast<int>(arc_mask.size()) || !arc_mask[id]) continue;
    arc_active_[id] = 1;
    active_arcs_.push_back(static_cast<ArcId>(id));
    ++out_degree[(*universe_)[id - 1].tail];
    ++in_degree[(*universe_)[id - 1].head];
  }
  out_begin_.assign(vertex_count_ + 1, 0);
  in_begin_.assign(vertex_count_ + 1, 0);
  for (int v = 0; v < vertex_count_; ++v) {
    out_begin_[v + 1] = out_begin_[v] + out_degree[v];
    in_begin_[v + 1] = in_begin_[v] + in_degree[v];
  }
  out_list_.assign(active_arcs_.size(), kNoArc);
  in_list_.assign(active_arcs_.size(), kNoArc);
  std::vector<int> out_fill(out_begin_.begin(), out_begin_.end() - 1);
  std::vector<int> in_fill(in_begin_.begin(), in_begin_.end() - 1);
  for (ArcId id : active_arcs_) {
    const Arc& a = (*universe_)[id - 1];
    out_list_[out_fill[a.tail]++] = id;
    in_list_[in_fill[a.head]++] = id;
  }

  // Kahn's algorithm with smallest-id-first tie breaking.
  topo_order_.clear();
  topo_index_.assign(vertex_count_, -1);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  std::vector<int> pending(in_degree.begin(), in_degree.end() - 1);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (vertex_active_[v] && pending[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    topo_index_[v] = static_cast<int>(topo_order_.size());
    topo_order_.push_back(v);
    for (ArcId a : out_arcs(v)) {
      const VertexId w = (*universe_)[a - 1].head;
      if (--pending[w] == 0) ready.push(w);
    }
  }
}

Dag PruneToCovered(const Dag& dag) {
  const auto forward = ForwardReach(dag, dag.source());
  if (!forward[dag.sink()]) {
    throw Error(ErrorCode::kNoStPath, "sink is not reachable from source");
  }
  const auto backward = BackwardReach(dag, dag.sink());
  std::vector<char> mask(dag.arc_universe() + 1, 0);
  for (ArcId a : dag.arcs()) {
    mask[a] = forward[dag.arc(a).tail] && backward[dag.arc(a).head];
  }
  return dag.WithArcs(mask, dag.sink(), /*covered=*/true);
}

Dag RestrictToPrefix(const Dag& dag, VertexId u) {
  if (u == dag.source()) {
    throw Error(ErrorCode::kSourceEqualsSink,
                "prefix subgraph of the source is empty");
  }
  if (!dag.has_vertex(u)) {
    throw Error(ErrorCode::kVertexUnreachable,
                "vertex " + std::to_string(u) + " is not in the graph");
  }
  const auto forward = ForwardReach(dag, dag.source());
  if (!forward[u]) {
    throw Error(ErrorCode::kVertexUnreachable,
                "vertex " + std::to_string(u) + " is unreachable from source");
  }
  const auto backward = BackwardReach(dag, u);
  std::vector<char> mask(dag.arc_universe() + 1, 0);
  for (ArcId a : dag.arcs()) {
    mask[a] = forward[dag.arc(a).tail] && backward[dag.arc(a).head];
  }
  return dag.WithArcs(mask, u, /*covered=*/true);
}

ArcOrder TopologicalArcOrder(const Dag& dag) {
  std::vector<int> pending(dag.vertex_count(), 0);
  std::priority_queue<ArcId, std::vector<ArcId>, std::greater<>> ready;
  for (VertexId v : dag.vertices()) {
    pending[v] = static_cast<int>(dag.in_arcs(v).size());
    if (pending[v] == 0) {
      for (ArcId a : dag.out_arcs(v)) ready.push(a);
    }
  }
  ArcOrder result;
  result.order.reserve(dag.arc_count());
  while (!ready.empty()) {
    const ArcId a = ready.top();
    ready.pop();
    result.order.push_back(a);
    const VertexId w = dag.arc(a).head;
    if (--pending[w] == 0) {
      for (ArcId next : dag.out_arcs(w)) ready.push(next);
    }
  }
  return result;
}

NonbasicSystem ChooseNonbasicSystem(const Dag& dag) {
  NonbasicSystem ns;
  ns.source_ = dag.source();
  ns.sink_ = dag.sink();
  ns.nonbasic_of_.assign(dag.vertex_count(), kNoArc);
  ns.is_nonbasic_.assign(dag.arc_universe() + 1, 0);
  for (VertexId v : dag.vertices()) {
    if (v == dag.source() || v == dag.sink()) continue;
    const auto out = dag.out_arcs(v);
    if (out.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) +
                      " has no outgoing arc; graph is not covered");
    }
    ns.nonbasic_of_[v] = out.front();
    ns.is_nonbasic_[out.front()] = 1;
    ++ns.size_;
  }
  // In-tree check: every inner vertex reaches the sink along nonbasic arcs.
  std::vector<char> reaches(dag.vertex_count(), 0);
  reaches[dag.sink()] = 1;
  const auto order = dag.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (v == dag.source() || v == dag.sink()) continue;
    if (!reaches[dag.arc(ns.nonbasic_of_[v]).head]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "nonbasic arcs do not form an in-tree rooted at the sink");
    }
    reaches[v] = 1;
  }
  return ns;
}

Path NonbasicPath(const Dag& dag, const NonbasicSystem& ns, VertexId v) {
  if (v == ns.source()) {
    throw Error(ErrorCode::kSourceHasNoNonbasicPath,
                "the source has no nonbasic path");
  }
  Path path{v, {}};
  while (v != ns.sink()) {
    const ArcId a = ns.nonbasic_of(v);
    if (a == kNoArc) {
      throw Error(ErrorCode::kVertexUnreachable,
                  "vertex " + std::to_string(v) + " has no nonbasic arc");
    }
    path.arcs.push_back(a);
    v = dag.arc(a).head;
  }
  return path;
}

std::uint64_t CountPaths(const Dag& dag, std::uint64_t cap) {
  std::vector<std::uint64_t> count(dag.vertex_count(), 0);
  count[dag.source()] = 1;
  for (VertexId v : dag.vertices()) {
    if (count[v] == 0) continue;
    for (ArcId a : dag.out_arcs(v)) {
      std::uint64_t& c = count[dag.arc(a).head];
      c = (c > cap - std::min(cap, count[v])) ? cap : c + count[v];
    }
  }
  return std::min(count[dag.sink()], cap);
}

std::vector<Path> EnumeratePaths(const Dag& dag, VertexId from, VertexId to,
                                 std::uint64_t limit) {
  // Paths from each vertex to `to`, saturating just above the limit.
  const std::uint64_t cap = limit == UINT64_MAX ? limit : limit + 1;
  std::vector<std::uint64_t> to_target(dag.vertex_count(), 0);
  to_target[to] = 1;
  const auto order = dag.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == to) continue;
    std::uint64_t total = 0;
    for (ArcId a : dag.out_arcs(*it)) {
      const std::uint64_t c = to_target[dag.arc(a).head];
      total = (total > cap - std::min(cap, c)) ? cap : total + c;
    }
    to_target[*it] = total;
  }
  if (to_target[from] > limit) {
    throw Error(ErrorCode::kTooManyPaths,
                "more than " + std::to_string(limit) + " paths");
  }
  std::vector<Path> paths;
  paths.reserve(to_target[from]);
  Path current{from, {}};
  std::function<void(VertexId)> walk = [&](VertexId v) {
    if (v == to) {
      paths.push_back(current);
      return;
    }
    for (ArcId a : dag.out_arcs(v)) {
      const VertexId w = dag.arc(a).head;
      if (to_target[w] == 0) continue;
      current.arcs.push_back(a);
      walk(w);
      current.arcs.pop_back();
    }
  };
  if (to_target[from] > 0) walk(from);
  return paths;
}

Path AnyPathToSink(const Dag& dag, VertexId v) {
  Path path{v, {}};
  while (v != dag.sink()) {
    const auto out = dag.out_arcs(v);
    if (out.empty()) {
      throw Error(ErrorCode::kNoStPath,
                  "vertex " + std::to_string(v) + " cannot reach the sink");
    }
    path.arcs.push_back(out.front());
    v = dag.arc(out.front()).head;
  }
  return path;
}

Path AnyPathFromSource(const Dag& dag, VertexId v) {
  std::vector<ArcId> reversed;
  while (v != dag.source()) {
    const auto in = dag.in_arcs(v);
    if (in.empty()) {
      throw Error(ErrorCode::kVertexUnreachable,
                  "vertex " + std::to_string(v) + " is unreachable from source");
    }
    reversed.push_back(in.front());
    v = dag.arc(in.front()).tail;
  }
  return Path{dag.source(), {reversed.rbegin(), reversed.rend()}};
}

VertexId PathEnd(const Dag& dag, const Path& p) {
  return p.arcs.empty() ? p.from : dag.arc(p.arcs.back()).head;
}

Path Concat(const Dag& dag, const Path& p, const Path& q) {
  if (PathEnd(dag, p) != q.from) {
    throw Error(ErrorCode::kInvalidArgument,
                "concatenated paths do not meet at a common vertex");
  }
  Path result = p;
  result.arcs.insert(result.arcs.end(), q.arcs.begin(), q.arcs.end());
  return result;
}

bool IsPath(const Dag& dag, const Path& p) {
  if (!dag.has_vertex(p.from)) return false;
  VertexId v = p.from;
  for (ArcId a : p.arcs) {
    if (!dag.has_arc(a) || dag.arc(a).tail != v) return false;
    v = dag.arc(a).head;
  }
  return true;
}

}  // namespace linspp
