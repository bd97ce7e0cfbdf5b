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

#include "linspp/apec.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "absl/container/flat_hash_set.h"
#include "linspp/error.h"
#include "linspp/linearizer.h"

namespace linspp {
namespace {

Path TreePath(const Dag& dag, const Apec1Potentials& pot, VertexId v) {
  std::vector<ArcId> reversed;
  while (v != dag.source()) {
    const ArcId a = pot.tree_arc[v];
    reversed.push_back(a);
    v = dag.arc(a).tail;
  }
  return Path{dag.source(), {reversed.rbegin(), reversed.rend()}};
}

Path SingleArc(const Dag& dag, ArcId a) {
  return Path{dag.arc(a).tail, {a}};
}

}  // namespace

Rational GammaTable::Value(const ArcSet& b, VertexId x) const {
  const int d = q_->order();
  if (b.size() > d) return Rational();
  if (b.size() == d) return q_->at(b);
  const auto it = row_index_.find(b);
  if (it == row_index_.end()) return Rational();
  // Values are stored vertex-major: the row block of x is contiguous.
  return values_[static_cast<size_t>(x) * rows_.size() + it->second];
}

void GammaTable::AddExtensions(ArcId a, VertexId x,
                               std::vector<Rational>& out) const {
  if (a + 1 >= lift_begin_.size()) return;
  for (size_t i = lift_begin_[a]; i < lift_begin_[a + 1]; ++i) {
    const Lift& lift = lifts_[i];
    out[lift.target] += lift.source < 0 ? lift.value : At(lift.source, x);
  }
}

GammaTable ComputeGamma(const OrderDCost& q, const NonbasicSystem& ns,
                        const Dag& dag) {
  GammaTable table;
  table.q_ = &q;
  table.vertex_count_ = dag.vertex_count();
  const int d = q.order();

  // Lift counts per arc id, shifted by one for the prefix sum below.
  const size_t arc_slots = static_cast<size_t>(dag.arc_universe()) + 2;
  std::vector<size_t> fill(arc_slots, 0);
  absl::flat_hash_set<ArcSet> relevant;
  relevant.insert(ArcSet());
  for (const auto& [key, value] : q.entries()) {
    const int k = key.size();
    if (k == d) {
      for (ArcId e : key) ++fill[e + 1];
    }
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (std::popcount(mask) > d - 1) continue;
      ArcSet sub;
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) sub = sub.With(key[i]);
      }
      relevant.insert(sub);
    }
  }
  table.rows_.assign(relevant.begin(), relevant.end());
  std::sort(table.rows_.begin(), table.rows_.end());
  const size_t rows = table.rows_.size();
  table.row_index_.reserve(rows);
  for (size_t r = 0; r < rows; ++r) {
    table.row_index_.emplace(table.rows_[r], static_cast<int>(r));
  }
  table.values_.assign(rows * table.vertex_count_, Rational());

  auto cell = [&](VertexId x, size_t r) -> Rational& {
    return table.values_[static_cast<size_t>(x) * rows + r];
  };
  const VertexId t = dag.sink();
  for (size_t r = 0; r < rows; ++r) cell(t, r) = q.at(table.rows_[r]);

  // gamma(B, x) = gamma(B, y) + gamma(B + e, y) for the nonbasic arc e = (x, y)
  // and e not in B. Only sets that are rows or full-size keys contribute, so
  // the second term is pushed from those sets to B = S - e, indexed by e.
  for (const ArcSet& b : table.rows_) {
    for (ArcId e : b) ++fill[e + 1];
  }
  for (size_t i = 1; i < arc_slots; ++i) fill[i] += fill[i - 1];
  table.lift_begin_ = fill;
  table.lifts_.resize(fill.back());
  for (size_t r = 0; r < rows; ++r) {
    const ArcSet& b = table.rows_[r];
    for (ArcId e : b) {
      table.lifts_[fill[e]++] = {table.row_index_.at(b.Without(e)),
                                 static_cast<int>(r), Rational()};
    }
  }
  for (const auto& [key, value] : q.entries()) {
    if (key.size() != d) continue;
    for (ArcId e : key) {
      table.lifts_[fill[e]++] = {table.row_index_.at(key.Without(e)), -1, value};
    }
  }

  const auto order = dag.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId x = *it;
    if (x == t || x == dag.source()) continue;
    const ArcId e = ns.nonbasic_of(x);
    const VertexId y = dag.arc(e).head;
    for (size_t r = 0; r < rows; ++r) cell(x, r) = cell(y, r);
    for (size_t i = table.lift_begin_[e]; i < table.lift_begin_[e + 1]; ++i) {
      const GammaTable::Lift& lift = table.lifts_[i];
      cell(x, lift.target) +=
          lift.source < 0 ? lift.value : cell(y, lift.source);
    }
  }
  return table;
}

Apec1Potentials ComputeApec1Potentials(const Dag& dag, const OrderDCost& q) {
  Apec1Potentials pot;
  pot.y.assign(dag.vertex_count(), Rational());
  pot.tree_arc.assign(dag.vertex_count(), kNoArc);
  std::vector<char> seen(dag.vertex_count(), 0);
  std::deque<VertexId> queue{dag.source()};
  seen[dag.source()] = 1;
  while (!queue.empty()) {
    const VertexId w = queue.front();
    queue.pop_front();
    for (ArcId a : dag.out_arcs(w)) {
      const VertexId z = dag.arc(a).head;
      if (seen[z]) continue;
      seen[z] = 1;
      pot.tree_arc[z] = a;
      pot.y[z] = pot.y[w] + q.at(ArcSet{a});
      queue.push_back(z);
    }
  }
  return pot;
}

ApecVerdict SolveApec1(const ApecInstance& instance) {
  const Dag& dag = instance.dag;
  const OrderDCost& q = instance.cost;
  if (q.order() != 1) {
    throw Error(ErrorCode::kOrderMismatch, "order-1 solver given order " +
                                               std::to_string(q.order()));
  }
  const Apec1Potentials pot = ComputeApec1Potentials(dag, q);
  ApecVerdict verdict;
  for (ArcId a : dag.arcs()) {
    const Arc& arc = dag.arc(a);
    if (pot.y[arc.head] == pot.y[arc.tail] + q.at(ArcSet{a})) continue;
    const Path rest = AnyPathToSink(dag, arc.head);
    Path via = Concat(dag, TreePath(dag, pot, arc.tail), SingleArc(dag, a));
    verdict.witness.emplace(Concat(dag, via, rest),
                            Concat(dag, TreePath(dag, pot, arc.head), rest));
    return verdict;
  }
  verdict.all_equal = true;
  verdict.beta = pot.y[dag.sink()] + q.at(ArcSet());
  return verdict;
}

ApecInstance CorrespondingApecInstance(ArcId a, const OrderDCost& q,
                                       const NonbasicSystem& ns,
                                       const Dag& dag,
                                       const GammaTable& gamma) {
  if (!dag.has_arc(a)) {
    throw Error(ErrorCode::kNotStronglyBasic,
                "arc " + std::to_string(a) + " is not in the graph");
  }
  return CorrespondingApecInstance(a, q, ns, dag, gamma,
                                   RestrictToPrefix(dag, dag.arc(a).tail));
}

ApecInstance CorrespondingApecInstance(ArcId a, const OrderDCost& q,
                                       const NonbasicSystem& ns,
                                       const Dag& dag, const GammaTable& gamma,
                                       const Dag& prefix) {
  if (!dag.has_arc(a) || dag.arc(a).tail == dag.source() ||
      ns.is_nonbasic(a)) {
    throw Error(ErrorCode::kNotStronglyBasic,
                "arc " + std::to_string(a) + " is not strongly basic");
  }
  if (q.order() < 2) {
    throw Error(ErrorCode::kOrderMismatch,
                "corresponding instances need order at least 2");
  }
  const VertexId u = dag.arc(a).tail;
  const VertexId v = dag.arc(a).head;
  const auto rows = gamma.rows();
  std::vector<Rational> values(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    values[r] = gamma.At(r, v) - gamma.At(r, u);
  }
  gamma.AddExtensions(a, v, values);
  OrderDCost reduced(q.order() - 1, q.arc_universe());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (values[r].is_zero()) continue;
    bool inside = true;
    for (ArcId e : rows[r]) inside = inside && prefix.has_arc(e);
    if (inside) reduced.Set(rows[r], std::move(values[r]));
  }
  return ApecInstance{prefix, std::move(reduced)};
}

LinearCost SourceBeta(const Dag& dag, const Rational& beta) {
  LinearCost c(dag.arc_universe());
  for (ArcId a : dag.out_arcs(dag.source())) c.Set(a, beta);
  return c;
}

ApecVerdict SolveApec(const ApecInstance& instance) {
  if (instance.cost.order() == 1) return SolveApec1(instance);
  const Dag& dag = instance.dag;
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  const LinVerdict lin = Linearize(dag, instance.cost, ns);
  ApecVerdict verdict;
  if (!lin.linearizable) {
    const WitnessCosts wc = EvaluateWitness(dag, instance.cost, *lin.failure);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (wc.costs[i] != wc.costs[j]) {
          verdict.witness.emplace(wc.paths[i], wc.paths[j]);
          return verdict;
        }
      }
    }
    throw Error(ErrorCode::kPropertyPiViolated,
                "failure witness has four equal path costs");
  }
  const LinearCost& c = *lin.cost;
  const auto source_arcs = dag.out_arcs(dag.source());
  auto via = [&](ArcId a) {
    return Concat(dag, SingleArc(dag, a),
                  NonbasicPath(dag, ns, dag.arc(a).head));
  };
  const ArcId first = source_arcs.front();
  for (ArcId a : source_arcs) {
    if (c.at(a) != c.at(first)) {
      verdict.witness.emplace(via(first), via(a));
      return verdict;
    }
  }
  for (ArcId a : dag.arcs()) {
    const Arc& arc = dag.arc(a);
    if (arc.tail == dag.source() || ns.is_nonbasic(a) || c.at(a).is_zero()) {
      continue;
    }
    const Path p = AnyPathFromSource(dag, arc.tail);
    verdict.witness.emplace(
        Concat(dag, p, NonbasicPath(dag, ns, arc.tail)),
        Concat(dag, Concat(dag, p, SingleArc(dag, a)),
               NonbasicPath(dag, ns, arc.head)));
    return verdict;
  }
  verdict.all_equal = true;
  verdict.beta = c.at(first);
  return verdict;
}

}  // namespace linspp
