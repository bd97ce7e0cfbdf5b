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

// Small fixtures and brute-force reference computations shared by the tests.
// Nothing here calls into the algorithms under test except graph plumbing.

#ifndef LINSPP_TESTS_TEST_UTIL_H_
#define LINSPP_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <vector>

#include "linspp/arc_set.h"
#include "linspp/costs.h"
#include "linspp/graph.h"
#include "linspp/rational.h"

namespace linspp::testing {

// s=0 -> t=1, arc 1.
inline Dag SingleArc() {
  const Arc arcs[] = {{0, 1}};
  return PruneToCovered(Dag::Build(2, arcs, 0, 1));
}

// s=0, u=1, w=2, t=3. Arcs 1:(s,u) 2:(s,w) 3:(u,t) 4:(w,t).
inline Dag Diamond() {
  const Arc arcs[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return PruneToCovered(Dag::Build(4, arcs, 0, 3));
}

// s=0, x1=1, x2=2, u=3, y1=4, y2=5, t=6.
// Arcs 1:(s,x1) 2:(s,x2) 3:(x1,u) 4:(x2,u) 5:(u,y2) 6:(u,y1) 7:(y1,t)
// 8:(y2,t). The nonbasic arc at u is 5, so 6 is strongly basic.
inline Dag DoubleDiamond() {
  const Arc arcs[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3},
                      {3, 5}, {3, 4}, {4, 6}, {5, 6}};
  return PruneToCovered(Dag::Build(7, arcs, 0, 6));
}

inline constexpr VertexId kDdU = 3;
inline constexpr ArcId kDdX1U = 3;
inline constexpr ArcId kDdUY1 = 6;

// Layered graph: source, `layers` layers of `width` vertices, sink; all arcs
// between consecutive layers.
inline Dag Layered(int layers, int width) {
  std::vector<Arc> arcs;
  const int n = layers * width + 2;
  const VertexId s = 0, t = n - 1;
  auto id = [&](int layer, int i) { return 1 + layer * width + i; };
  for (int i = 0; i < width; ++i) arcs.push_back({s, id(0, i)});
  for (int l = 0; l + 1 < layers; ++l) {
    for (int i = 0; i < width; ++i) {
      for (int j = 0; j < width; ++j) arcs.push_back({id(l, i), id(l + 1, j)});
    }
  }
  for (int i = 0; i < width; ++i) arcs.push_back({id(layers - 1, i), t});
  return PruneToCovered(Dag::Build(n, arcs, s, t));
}

// Random DAG on n vertices: a backbone 0->1->...->n-1 plus forward arcs.
inline Dag RandomDag(std::mt19937_64& rng, int n, int m) {
  std::vector<Arc> arcs;
  for (int v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(arcs.size()) < m) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    arcs.push_back({a, b});
  }
  return PruneToCovered(Dag::Build(n, arcs, 0, n - 1));
}

inline Rational RandomValue(std::mt19937_64& rng, int max_num = 9) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

// Every subset of `ids` with at most `max_size` elements.
inline void AddSubsets(const std::vector<ArcId>& ids, size_t from,
                       int max_size, std::vector<ArcId>& pick,
                       std::vector<ArcSet>& out) {
  out.push_back(ArcSet::FromIds(pick));
  if (static_cast<int>(pick.size()) == max_size) return;
  for (size_t i = from; i < ids.size(); ++i) {
    pick.push_back(ids[i]);
    AddSubsets(ids, i + 1, max_size, pick, out);
    pick.pop_back();
  }
}

inline std::vector<ArcSet> SubsetsUpTo(const std::vector<ArcId>& ids,
                                       int max_size) {
  std::vector<ArcSet> out;
  std::vector<ArcId> pick;
  if (max_size >= 0) AddSubsets(ids, 0, max_size, pick, out);
  return out;
}

// Random order-d cost on the active arcs with roughly `density` of all
// subsets of size <= d populated.
inline OrderDCost RandomCost(std::mt19937_64& rng, const Dag& dag, int d,
                             double density = 0.5) {
  OrderDCost q(d, dag.arc_universe());
  std::vector<ArcId> ids(dag.arcs().begin(), dag.arcs().end());
  std::bernoulli_distribution keep(density);
  for (const ArcSet& s : SubsetsUpTo(ids, d)) {
    if (keep(rng)) q.Set(s, RandomValue(rng));
  }
  return q;
}

inline LinearCost RandomLinear(std::mt19937_64& rng, const Dag& dag) {
  LinearCost c(dag.arc_universe());
  for (ArcId a : dag.arcs()) c.Set(a, RandomValue(rng));
  return c;
}

// Reference evaluation: sum q over every subset of the path's arcs.
inline Rational NaiveEval(const OrderDCost& q, const std::vector<ArcId>& arcs) {
  Rational total;
  for (const ArcSet& s : SubsetsUpTo(arcs, q.order())) total += q.at(s);
  return total;
}

inline Rational NaiveLinear(const LinearCost& c,
                            const std::vector<ArcId>& arcs) {
  Rational total;
  for (ArcId a : arcs) total += c.at(a);
  return total;
}

inline Path Join(const Path& a, const Path& b) {
  Path out{a.from, a.arcs};
  out.arcs.insert(out.arcs.end(), b.arcs.begin(), b.arcs.end());
  return out;
}

// All source-sink paths by plain depth-first search.
inline void CollectPaths(const Dag& dag, VertexId v, VertexId to,
                         std::vector<ArcId>& prefix,
                         std::vector<std::vector<ArcId>>& out) {
  if (v == to) {
    out.push_back(prefix);
    return;
  }
  for (ArcId a : dag.out_arcs(v)) {
    prefix.push_back(a);
    CollectPaths(dag, dag.arc(a).head, to, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<ArcId>> AllPaths(const Dag& dag, VertexId from,
                                                VertexId to) {
  std::vector<std::vector<ArcId>> out;
  std::vector<ArcId> prefix;
  CollectPaths(dag, from, to, prefix, out);
  return out;
}

inline std::vector<std::vector<ArcId>> AllPaths(const Dag& dag) {
  return AllPaths(dag, dag.source(), dag.sink());
}

// True when every source-sink path has the same cost under q.
inline bool AllPathsEqual(const Dag& dag, const OrderDCost& q,
                          Rational* common = nullptr) {
  const auto paths = AllPaths(dag);
  const Rational first = NaiveEval(q, paths.front());
  for (const auto& p : paths) {
    if (NaiveEval(q, p) != first) return false;
  }
  if (common) *common = first;
  return true;
}

}  // namespace linspp::testing

#endif  // LINSPP_TESTS_TEST_UTIL_H_
