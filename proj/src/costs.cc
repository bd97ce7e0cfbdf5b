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

#include "linspp/costs.h"

#include <algorithm>
#include <string>

#include "linspp/error.h"

namespace linspp {
namespace {

const Rational& Zero() {
  static const Rational* const kZero = new Rational();
  return *kZero;
}

// Number of subsets of an n-set with at most k elements, saturating at `cap`.
std::uint64_t SubsetCount(int n, int k, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int i = 0; i <= std::min(n, k); ++i) {
    if (i > 0) {
      const auto next = static_cast<unsigned __int128>(binom) * (n - i + 1) / i;
      if (next > cap) return cap;
      binom = static_cast<std::uint64_t>(next);
    }
    total += binom;
    if (total >= cap) return cap;
  }
  return total;
}

void AccumulateSubsets(const OrderDCost& q, std::span<const ArcId> sorted,
                       size_t start, ArcSet current, Rational& sum) {
  sum += q.at(current);
  if (current.size() == q.order()) return;
  for (size_t i = start; i < sorted.size(); ++i) {
    AccumulateSubsets(q, sorted, i + 1, current.With(sorted[i]), sum);
  }
}

}  // namespace

OrderDCost::OrderDCost(int order, int arc_universe)
    : order_(order), arc_universe_(arc_universe) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorCode::kOrderMismatch,
                "order must lie in [1, " + std::to_string(kMaxOrder) + "]");
  }
}

const Rational& OrderDCost::at(const ArcSet& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? Zero() : it->second;
}

void OrderDCost::CheckKey(const ArcSet& key) const {
  if (key.size() > order_) {
    throw Error(ErrorCode::kOrderMismatch,
                "cost key {" + key.ToString() + "} exceeds order " +
                    std::to_string(order_));
  }
  for (ArcId a : key) {
    if (a < 1 || a > static_cast<ArcId>(arc_universe_)) {
      throw Error(ErrorCode::kArcIdOutOfRange,
                  "arc id " + std::to_string(a) + " out of range");
    }
  }
}

void OrderDCost::Set(const ArcSet& key, Rational value) {
  CheckKey(key);
  if (value.is_zero()) {
    entries_.erase(key);
  } else {
    entries_.insert_or_assign(key, std::move(value));
  }
}

void OrderDCost::Add(const ArcSet& key, const Rational& value) {
  if (value.is_zero()) return;
  CheckKey(key);
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

std::vector<std::pair<ArcSet, Rational>> OrderDCost::SortedEntries() const {
  std::vector<std::pair<ArcSet, Rational>> out(entries_.begin(),
                                               entries_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool operator==(const OrderDCost& a, const OrderDCost& b) {
  return a.order_ == b.order_ && a.entries_ == b.entries_;
}

const Rational& LinearCost::at(ArcId a) const {
  if (a < 1 || a >= values_.size()) {
    throw Error(ErrorCode::kUnknownArc,
                "arc " + std::to_string(a) + " is not in the graph");
  }
  return values_[a];
}

void LinearCost::Set(ArcId a, Rational value) {
  if (a < 1 || a >= values_.size()) {
    throw Error(ErrorCode::kUnknownArc,
                "arc " + std::to_string(a) + " is not in the graph");
  }
  values_[a] = std::move(value);
}

Rational EvalLinear(const LinearCost& c, std::span<const ArcId> arcs) {
  Rational sum;
  for (ArcId a : arcs) sum += c.at(a);
  return sum;
}

Rational EvalOrderD(const OrderDCost& q, std::span<const ArcId> arcs) {
  std::vector<ArcId> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  for (ArcId a : sorted) {
    if (a < 1 || a > static_cast<ArcId>(q.arc_universe())) {
      throw Error(ErrorCode::kUnknownArc,
                  "arc " + std::to_string(a) + " is not in the graph");
    }
  }
  Rational sum;
  const std::uint64_t keys = q.size();
  if (SubsetCount(static_cast<int>(sorted.size()), q.order(), keys + 1) <=
      keys) {
    AccumulateSubsets(q, sorted, 0, ArcSet(), sum);
    return sum;
  }
  for (const auto& [key, value] : q.entries()) {
    if (std::includes(sorted.begin(), sorted.end(), key.begin(), key.end())) {
      sum += value;
    }
  }
  return sum;
}

LinearCost ReduceForm(const LinearCost& c, const NonbasicSystem& ns,
                      const Dag& dag) {
  std::vector<Rational> potential(dag.vertex_count());
  const auto order = dag.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (v == dag.sink() || v == dag.source()) continue;
    const ArcId e = ns.nonbasic_of(v);
    potential[v] = c.at(e) + potential[dag.arc(e).head];
  }
  LinearCost reduced(c.arc_universe());
  for (ArcId a : dag.arcs()) {
    const Arc& arc = dag.arc(a);
    if (ns.is_nonbasic(a)) continue;
    reduced.Set(a, c.at(a) + potential[arc.head] - potential[arc.tail]);
  }
  return reduced;
}

OrderDCost LinearAsOrderD(const LinearCost& c, int order) {
  OrderDCost q(order, c.arc_universe());
  for (ArcId a = 1; a <= static_cast<ArcId>(c.arc_universe()); ++a) {
    q.Set(ArcSet{a}, c.at(a));
  }
  return q;
}

}  // namespace linspp
