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

#ifndef LINSPP_COSTS_H_
#define LINSPP_COSTS_H_

#include <span>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "linspp/arc_set.h"
#include "linspp/graph.h"
#include "linspp/rational.h"

namespace linspp {

// Sparse order-d interaction costs: a value for every arc subset of size at
// most d, absent keys meaning zero. The empty set may carry a value.
class OrderDCost {
 public:
  using Map = absl::flat_hash_map<ArcSet, Rational>;

  // `arc_universe` bounds valid arc ids to [1, arc_universe].
  OrderDCost(int order, int arc_universe);

  int order() const { return order_; }
  int arc_universe() const { return arc_universe_; }
  size_t size() const { return entries_.size(); }

  // Zero for absent keys.
  const Rational& at(const ArcSet& key) const;
  // Zero values erase the key. Throws Error(kOrderMismatch) for keys larger
  // than the order and Error(kArcIdOutOfRange) for unknown arc ids.
  void Set(const ArcSet& key, Rational value);
  void Add(const ArcSet& key, const Rational& value);

  const Map& entries() const { return entries_; }
  // Entries ordered by key.
  std::vector<std::pair<ArcSet, Rational>> SortedEntries() const;

  friend bool operator==(const OrderDCost& a, const OrderDCost& b);

 private:
  void CheckKey(const ArcSet& key) const;

  int order_;
  int arc_universe_;
  Map entries_;
};

// Linear arc costs, dense over the arc universe; absent arcs cost zero.
class LinearCost {
 public:
  explicit LinearCost(int arc_universe)
      : values_(static_cast<size_t>(arc_universe) + 1) {}

  int arc_universe() const { return static_cast<int>(values_.size()) - 1; }

  // Throws Error(kUnknownArc) for ids outside the universe.
  const Rational& at(ArcId a) const;
  void Set(ArcId a, Rational value);

  friend bool operator==(const LinearCost&, const LinearCost&) = default;

 private:
  std::vector<Rational> values_;
};

// Sum of arc costs along the arcs.
Rational EvalLinear(const LinearCost& c, std::span<const ArcId> arcs);

// Sum of q(S) over all subsets S of the arcs with |S| <= d, including the
// empty set. Picks whichever of key scanning or subset enumeration touches
// fewer terms.
Rational EvalOrderD(const OrderDCost& q, std::span<const ArcId> arcs);

// red(c) via vertex potentials phi(v) = c(N_v), phi(source) = 0:
// red(c)(u,v) = c(u,v) + phi(v) - phi(u). Preserves every source-sink path
// cost and vanishes on nonbasic arcs. O(n + m).
LinearCost ReduceForm(const LinearCost& c, const NonbasicSystem& ns,
                      const Dag& dag);

// q({a}) = c(a), everything else zero.
OrderDCost LinearAsOrderD(const LinearCost& c, int order);

}  // namespace linspp

#endif  // LINSPP_COSTS_H_
