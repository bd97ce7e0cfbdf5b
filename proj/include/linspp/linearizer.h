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

#ifndef LINSPP_LINEARIZER_H_
#define LINSPP_LINEARIZER_H_

#include <cstdint>
#include <optional>

#include "linspp/apec.h"
#include "linspp/costs.h"
#include "linspp/graph.h"
#include "linspp/rational.h"

namespace linspp {

// A strongly basic arc a = (u, v) whose value f(P.a.N_v) - f(P.N_u) depends on
// the source-u path P. The two-path system (u, p, q, nonbasic_tail,
// arc_tail) violates the two-path balance equation.
struct FailureWitness {
  ArcId arc = kNoArc;
  VertexId vertex = kNoVertex;  // tail of `arc`
  Path p;
  Path q;
  Path nonbasic_tail;  // N_u
  Path arc_tail;       // a . N_v
};

struct LinVerdict {
  bool linearizable = false;
  // Unique linearizing cost in reduced form; set iff linearizable.
  std::optional<LinearCost> cost;
  std::optional<FailureWitness> failure;
};

struct LinearizeOptions {
  // Worker threads for the per-arc subproblems of the top level.
  int jobs = 1;
};

// Decides linearizability of the order-d instance on a covered DAG and
// returns the reduced-form linearization or a failure witness. Runs in
// O(d^2 m^d) for dense inputs.
LinVerdict Linearize(const Dag& dag, const OrderDCost& q,
                     const NonbasicSystem& ns,
                     const LinearizeOptions& options = {});

// val(a) for a strongly basic arc after certifying that it does not depend on
// the path. Throws Error(kPropertyPiViolated) otherwise.
Rational ValOfArc(ArcId a, const OrderDCost& q, const NonbasicSystem& ns,
                  const Dag& dag, const GammaTable& gamma);

// Compares c and q on every source-sink path. Throws Error(kTooManyPaths).
bool VerifyLinearization(const Dag& dag, const OrderDCost& q,
                         const LinearCost& c, std::uint64_t limit);

// The four concatenations of a failure witness in the order
// P.Q1, P.Q2, Q.Q1, Q.Q2 with Q1 = N_u and Q2 = a.N_v.
struct WitnessCosts {
  Path paths[4];
  Rational costs[4];
};
WitnessCosts EvaluateWitness(const Dag& dag, const OrderDCost& q,
                             const FailureWitness& w);

}  // namespace linspp

#endif  // LINSPP_LINEARIZER_H_
