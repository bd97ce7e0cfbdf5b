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

#include "linspp/linearizer.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "linspp/error.h"

namespace linspp {
namespace {

// Strongly basic arcs leaving one vertex; they share a prefix subgraph.
struct ArcGroup {
  VertexId tail;
  std::vector<ArcId> arcs;
};

struct GroupResult {
  std::vector<Rational> values;  // parallel to ArcGroup::arcs
  std::optional<FailureWitness> failure;
};

GroupResult SolveGroup(const ArcGroup& group, const OrderDCost& q,
                       const NonbasicSystem& ns, const Dag& dag,
                       const GammaTable& gamma) {
  GroupResult result;
  const Dag prefix = RestrictToPrefix(dag, group.tail);
  for (ArcId a : group.arcs) {
    const ApecInstance instance =
        CorrespondingApecInstance(a, q, ns, dag, gamma, prefix);
    ApecVerdict verdict = SolveApec(instance);
    if (!verdict.all_equal) {
      FailureWitness w;
      w.arc = a;
      w.vertex = group.tail;
      w.p = std::move(verdict.witness->first);
      w.q = std::move(verdict.witness->second);
      w.nonbasic_tail = NonbasicPath(dag, ns, group.tail);
      w.arc_tail = Concat(dag, Path{group.tail, {a}},
                          NonbasicPath(dag, ns, dag.arc(a).head));
      result.failure = std::move(w);
      return result;
    }
    result.values.push_back(std::move(*verdict.beta));
  }
  return result;
}

}  // namespace

LinVerdict Linearize(const Dag& dag, const OrderDCost& q,
                     const NonbasicSystem& ns, const LinearizeOptions& options) {
  const int d = q.order();
  LinVerdict verdict;
  LinearCost c(dag.arc_universe());
  if (d == 1) {
    for (ArcId a : dag.arcs()) {
      Rational value = q.at(ArcSet{a});
      if (dag.arc(a).tail == dag.source()) value += q.at(ArcSet());
      c.Set(a, std::move(value));
    }
    verdict.linearizable = true;
    verdict.cost = ReduceForm(c, ns, dag);
    return verdict;
  }

  const GammaTable gamma = ComputeGamma(q, ns, dag);
  for (ArcId a : dag.out_arcs(dag.source())) {
    const VertexId v = dag.arc(a).head;
    c.Set(a, gamma.Value(ArcSet(), v) + gamma.Value(ArcSet{a}, v));
  }

  std::vector<ArcGroup> groups;
  for (VertexId u : dag.vertices()) {
    if (u == dag.source() || u == dag.sink()) continue;
    ArcGroup group{u, {}};
    for (ArcId a : dag.out_arcs(u)) {
      if (!ns.is_nonbasic(a)) group.arcs.push_back(a);
    }
    if (!group.arcs.empty()) groups.push_back(std::move(group));
  }

  std::vector<GroupResult> results(groups.size());
  const int jobs = std::max(
      1, std::min<int>(options.jobs, static_cast<int>(groups.size())));
  if (jobs == 1) {
    for (size_t g = 0; g < groups.size(); ++g) {
      results[g] = SolveGroup(groups[g], q, ns, dag, gamma);
      if (results[g].failure) break;
    }
  } else {
    // Groups are handed out in order; once a group fails, later groups are
    // skipped, so the reported failure is the one a serial run would find.
    std::atomic<size_t> next{0};
    std::atomic<size_t> first_failure{groups.size()};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
      for (;;) {
        const size_t g = next.fetch_add(1);
        if (g >= groups.size() || g > first_failure.load()) return;
        try {
          results[g] = SolveGroup(groups[g], q, ns, dag, gamma);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          first_failure.store(0);
          return;
        }
        if (results[g].failure) {
          size_t seen = first_failure.load();
          while (g < seen && !first_failure.compare_exchange_weak(seen, g)) {
          }
        }
      }
    };
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }

  for (size_t g = 0; g < groups.size(); ++g) {
    if (results[g].failure) {
      verdict.failure = std::move(results[g].failure);
      return verdict;
    }
    for (size_t i = 0; i < groups[g].arcs.size(); ++i) {
      c.Set(groups[g].arcs[i], std::move(results[g].values[i]));
    }
  }
  verdict.linearizable = true;
  verdict.cost = std::move(c);
  return verdict;
}

Rational ValOfArc(ArcId a, const OrderDCost& q, const NonbasicSystem& ns,
                  const Dag& dag, const GammaTable& gamma) {
  const ApecVerdict verdict =
      SolveApec(CorrespondingApecInstance(a, q, ns, dag, gamma));
  if (!verdict.all_equal) {
    throw Error(ErrorCode::kPropertyPiViolated,
                "value of arc " + std::to_string(a) + " depends on the path");
  }
  return *verdict.beta;
}

bool VerifyLinearization(const Dag& dag, const OrderDCost& q,
                         const LinearCost& c, std::uint64_t limit) {
  for (const Path& p : EnumeratePaths(dag, limit)) {
    if (EvalLinear(c, p.arcs) != EvalOrderD(q, p.arcs)) return false;
  }
  return true;
}

WitnessCosts EvaluateWitness(const Dag& dag, const OrderDCost& q,
                             const FailureWitness& w) {
  WitnessCosts out;
  out.paths[0] = Concat(dag, w.p, w.nonbasic_tail);
  out.paths[1] = Concat(dag, w.p, w.arc_tail);
  out.paths[2] = Concat(dag, w.q, w.nonbasic_tail);
  out.paths[3] = Concat(dag, w.q, w.arc_tail);
  for (int i = 0; i < 4; ++i) out.costs[i] = EvalOrderD(q, out.paths[i].arcs);
  return out;
}

}  // namespace linspp
