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

// All-paths-equal-cost decisions and the per-arc instances that reduce
// linearization of order d to equal-cost questions of order d - 1.

#ifndef LINSPP_APEC_H_
#define LINSPP_APEC_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "linspp/arc_set.h"
#include "linspp/costs.h"
#include "linspp/graph.h"
#include "linspp/rational.h"

namespace linspp {

// Do all source-sink paths of `dag` have the same cost under `cost`? The
// sink of `dag` may be any vertex of the original graph.
struct ApecInstance {
  Dag dag;
  OrderDCost cost;
};

struct ApecVerdict {
  bool all_equal = false;
  // Common path cost; set iff all_equal.
  std::optional<Rational> beta;
  // Two source-sink paths with different costs; set iff !all_equal.
  std::optional<std::pair<Path, Path>> witness;
};

// Partial sums gamma(B, x) = sum of q(B u C) over C subset of N_x \ B with
// |C| <= d - |B|, kept for every B of size <= d - 1 contained in some stored
// key of q, and every vertex x other than the source.
//
// The table refers to `q`, which must outlive it.
class GammaTable {
 public:
  int order() const { return q_->order(); }

  // gamma(B, x) for |B| <= d. Sets of size d yield q(B); sets not contained
  // in any stored key yield zero.
  Rational Value(const ArcSet& b, VertexId x) const;

  // Every B with a stored row, in ascending order. Includes the empty set.
  std::span<const ArcSet> rows() const { return rows_; }
  // gamma(rows()[row], x).
  const Rational& At(size_t row, VertexId x) const {
    return values_[static_cast<size_t>(x) * rows_.size() + row];
  }
  // Adds gamma(B + a, x) to out[i] for every row B = rows()[i] without a.
  // Rows whose extension by a is zero are left alone.
  void AddExtensions(ArcId a, VertexId x, std::vector<Rational>& out) const;

 private:
  friend GammaTable ComputeGamma(const OrderDCost& q, const NonbasicSystem& ns,
                                 const Dag& dag);

  const OrderDCost* q_ = nullptr;
  int vertex_count_ = 0;
  std::vector<ArcSet> rows_;
  absl::flat_hash_map<ArcSet, int> row_index_;
  std::vector<Rational> values_;  // vertex_count_ x rows_.size()
  // For each arc e, the sets S containing e that are rows or full-size keys,
  // as (row of S - e, row of S or -1, q(S) when -1).
  struct Lift {
    int target;
    int source;
    Rational value;
  };
  std::vector<size_t> lift_begin_;  // by arc id, into lifts_
  std::vector<Lift> lifts_;
};

// Fills the table sink-first along the nonbasic in-tree:
// gamma(B, x) = gamma(B, y) + gamma(B u {e}, y) for the nonbasic arc e = (x, y)
// with e not in B, and gamma(B, x) = gamma(B, y) otherwise.
GammaTable ComputeGamma(const OrderDCost& q, const NonbasicSystem& ns,
                        const Dag& dag);

// Order-1 equal-cost check by dynamic programming over a BFS out-tree from the
// source. O(m).
ApecVerdict SolveApec1(const ApecInstance& instance);

// Potentials of the order-1 dynamic program: y(w) is the cost of the tree path
// to w, built from the singleton values of `q`. Arcs of `tree_arc` by vertex
// are the BFS tree; kNoArc at the source and at inactive vertices.
struct Apec1Potentials {
  std::vector<Rational> y;
  std::vector<ArcId> tree_arc;
};
Apec1Potentials ComputeApec1Potentials(const Dag& dag, const OrderDCost& q);

// Order-(d-1) instance on the prefix subgraph of u for the strongly basic arc
// a = (u, v). The stored cost q_a satisfies, for every source-u path P,
//   cost(q_a, P) = f(P . a . N_v) - f(P . N_u)
// where f evaluates q. Only nonzero entries are stored.
// Throws Error(kNotStronglyBasic).
ApecInstance CorrespondingApecInstance(ArcId a, const OrderDCost& q,
                                       const NonbasicSystem& ns,
                                       const Dag& dag,
                                       const GammaTable& gamma);
// Same, reusing an already restricted prefix subgraph of tail(a).
ApecInstance CorrespondingApecInstance(ArcId a, const OrderDCost& q,
                                       const NonbasicSystem& ns,
                                       const Dag& dag, const GammaTable& gamma,
                                       const Dag& prefix);

// beta on every arc leaving the source, zero elsewhere.
LinearCost SourceBeta(const Dag& dag, const Rational& beta);

// Equal-cost decision of any order. Order 1 runs the dynamic program; higher
// orders linearize and test whether the reduced linearization is SourceBeta
// for some beta.
ApecVerdict SolveApec(const ApecInstance& instance);

}  // namespace linspp

#endif  // LINSPP_APEC_H_
