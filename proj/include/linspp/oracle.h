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

// Brute-force deciders. They enumerate paths explicitly and are meant for
// small graphs, as ground truth for the linearizer.

#ifndef LINSPP_ORACLE_H_
#define LINSPP_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "linspp/costs.h"
#include "linspp/graph.h"
#include "linspp/rational.h"

namespace linspp {

// Two source-v paths and two v-sink paths. Any of the degenerate cases
// (p1 == p2, q1 == q2, v = source, v = sink) is allowed.
struct TwoPathSystem {
  VertexId v = kNoVertex;
  Path p1, p2;
  Path q1, q2;
};

// f(P1.Q1) + f(P2.Q2) == f(P1.Q2) + f(P2.Q1).
bool TwoPathLinearizable(const Dag& dag, const TwoPathSystem& tps,
                         const OrderDCost& q);

// Calls `visit` on every system with p1 <= p2 and q1 <= q2 in lexicographic
// arc order, vertices in topological order. Stops early when `visit`
// returns false. Throws Error(kTooManySystems) before visiting anything if
// there are more than `limit` systems.
void ForEachTwoPathSystem(const Dag& dag, std::uint64_t limit,
                          const std::function<bool(const TwoPathSystem&)>& visit);
std::vector<TwoPathSystem> EnumerateTwoPathSystems(const Dag& dag,
                                                   std::uint64_t limit);

// Number of systems ForEachTwoPathSystem would visit, saturating at `cap`.
std::uint64_t CountTwoPathSystems(const Dag& dag, std::uint64_t cap);

struct LpVerdict {
  bool linearizable = false;
  // Reduced form of some solution; set iff linearizable.
  std::optional<LinearCost> cost;
  // Source-sink paths in lexicographic order; row i of the system is paths[i].
  std::vector<Path> paths;
  // Multipliers y with sum_i y_i [P_i] = 0 and sum_i y_i f(P_i) != 0; set iff
  // not linearizable.
  std::optional<std::vector<Rational>> certificate;
};

// Solves {sum of c over P = f(P) : all source-sink paths P} by exact
// fraction-free elimination. Throws Error(kTooManyPaths).
LpVerdict OracleLinearizeLp(const Dag& dag, const OrderDCost& q,
                            std::uint64_t limit);

// True iff every two-path system satisfies the balance equation.
// Throws Error(kTooManySystems).
bool OracleLinearizeTps(const Dag& dag, const OrderDCost& q,
                        std::uint64_t limit);

// A linear cost supported on representative arcs that reproduces f on the
// four concatenations of `tps`. For distinct segments the representative
// of a segment is its first arc outside the sibling segment, and the
// representative of q2 gets cost zero. Throws Error(kNotLinearizable).
LinearCost TwoPathLinearizingCost(const Dag& dag, const TwoPathSystem& tps,
                                  const OrderDCost& q);

}  // namespace linspp

#endif  // LINSPP_ORACLE_H_
