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

#include <vector>

#include <gtest/gtest.h>

#include "linspp/apec.h"
#include "linspp/error.h"
#include "test_util.h"

namespace linspp {
namespace {

using testing::AllPaths;
using testing::NaiveEval;
using testing::NaiveLinear;

bool EveryPathMatches(const Dag& dag, const OrderDCost& q, const LinearCost& c) {
  for (const auto& p : AllPaths(dag)) {
    if (NaiveEval(q, p) != NaiveLinear(c, p)) return false;
  }
  return true;
}

OrderDCost DiamondExample() {
  OrderDCost q(2, 4);
  q.Set({1}, 1);
  q.Set({3}, 2);
  q.Set({1, 3}, 3);
  return q;
}

TEST(LinearizerTest, DiamondExample) {
  const Dag dag = testing::Diamond();
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  const OrderDCost q = DiamondExample();
  const LinVerdict v = Linearize(dag, q, ns);
  ASSERT_TRUE(v.linearizable);
  EXPECT_EQ(v.cost->at(1), Rational(6));
  EXPECT_EQ(v.cost->at(2), Rational(0));
  EXPECT_EQ(v.cost->at(3), Rational(0));
  EXPECT_EQ(v.cost->at(4), Rational(0));
  EXPECT_TRUE(VerifyLinearization(dag, q, *v.cost, 100));
  LinearCost off = *v.cost;
  off.Set(1, 7);
  EXPECT_FALSE(VerifyLinearization(dag, q, off, 100));
  EXPECT_TRUE(VerifyLinearization(dag, OrderDCost(2, 4), LinearCost(4), 100));
}

TEST(LinearizerTest, DoubleDiamondCounterexample) {
  const Dag dag = testing::DoubleDiamond();
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  OrderDCost q(2, dag.arc_universe());
  q.Set({testing::kDdX1U, testing::kDdUY1}, 1);
  const LinVerdict v = Linearize(dag, q, ns);
  ASSERT_FALSE(v.linearizable);
  ASSERT_TRUE(v.failure.has_value());
  EXPECT_EQ(v.failure->arc, testing::kDdUY1);
  EXPECT_EQ(v.failure->vertex, testing::kDdU);
  const WitnessCosts w = EvaluateWitness(dag, q, *v.failure);
  // P.N_u + Q.aN_v versus P.aN_v + Q.N_u.
  EXPECT_NE(w.costs[0] + w.costs[3], w.costs[1] + w.costs[2]);
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(IsPath(dag, w.paths[i]));
    EXPECT_EQ(w.costs[i], NaiveEval(q, w.paths[i].arcs));
  }
}

TEST(LinearizerTest, RejectsOversizedKeys) {
  const Dag dag = testing::Diamond();
  OrderDCost q(3, 4);
  q.Set({1, 3, 2}, 1);
  // Order 3 is fine; the linearizer handles any order up to the maximum.
  EXPECT_NO_THROW(Linearize(dag, q, ChooseNonbasicSystem(dag)));
}

TEST(LinearizerTest, OrderOneIsAlwaysLinearizable) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Dag dag = testing::RandomDag(rng, 6, 10);
    const OrderDCost q = testing::RandomCost(rng, dag, 1, 0.8);
    const LinVerdict v = Linearize(dag, q, ChooseNonbasicSystem(dag));
    ASSERT_TRUE(v.linearizable);
    EXPECT_TRUE(EveryPathMatches(dag, q, *v.cost));
  }
}

TEST(LinearizerTest, LinearInputReturnsReducedForm) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const Dag dag = i % 5 == 0 ? testing::DoubleDiamond()
                               : testing::RandomDag(rng, 3 + i % 5, 9);
    const NonbasicSystem ns = ChooseNonbasicSystem(dag);
    const LinearCost c0 = testing::RandomLinear(rng, dag);
    const int d = 2 + i % 2;
    const LinVerdict v = Linearize(dag, LinearAsOrderD(c0, d), ns);
    ASSERT_TRUE(v.linearizable);
    EXPECT_EQ(*v.cost, ReduceForm(c0, ns, dag));
  }
}

TEST(LinearizerTest, ValOfArc) {
  std::mt19937_64 rng(5);
  const Dag dag = testing::DoubleDiamond();
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  {
    const OrderDCost q(2, dag.arc_universe());
    const GammaTable gamma = ComputeGamma(q, ns, dag);
    EXPECT_EQ(ValOfArc(testing::kDdUY1, q, ns, dag, gamma), Rational(0));
  }
  const LinearCost c0 = testing::RandomLinear(rng, dag);
  const OrderDCost q = LinearAsOrderD(c0, 2);
  const GammaTable gamma = ComputeGamma(q, ns, dag);
  const ArcId a = testing::kDdUY1;
  const Rational expected =
      c0.at(a) + NaiveLinear(c0, NonbasicPath(dag, ns, dag.arc(a).head).arcs) -
      NaiveLinear(c0, NonbasicPath(dag, ns, dag.arc(a).tail).arcs);
  EXPECT_EQ(ValOfArc(a, q, ns, dag, gamma), expected);
}

TEST(LinearizerTest, ValOfArcMatchesEveryPrefix) {
  std::mt19937_64 rng(6);
  const Dag dag = testing::Layered(3, 2);
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  const OrderDCost q = LinearAsOrderD(testing::RandomLinear(rng, dag), 2);
  const GammaTable gamma = ComputeGamma(q, ns, dag);
  for (ArcId a : dag.arcs()) {
    const VertexId u = dag.arc(a).tail, v = dag.arc(a).head;
    if (u == dag.source() || ns.is_nonbasic(a)) continue;
    const Rational val = ValOfArc(a, q, ns, dag, gamma);
    std::vector<ArcId> anv{a};
    for (ArcId x : NonbasicPath(dag, ns, v).arcs) anv.push_back(x);
    for (auto p : AllPaths(dag, dag.source(), u)) {
      auto through = p;
      through.insert(through.end(), anv.begin(), anv.end());
      auto around = p;
      for (ArcId x : NonbasicPath(dag, ns, u).arcs) around.push_back(x);
      EXPECT_EQ(val, NaiveEval(q, through) - NaiveEval(q, around));
    }
  }
}

TEST(LinearizerTest, ValOfArcRequiresProperty) {
  const Dag dag = testing::DoubleDiamond();
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  OrderDCost q(2, dag.arc_universe());
  q.Set({testing::kDdX1U, testing::kDdUY1}, 1);
  const GammaTable gamma = ComputeGamma(q, ns, dag);
  EXPECT_THROW(ValOfArc(testing::kDdUY1, q, ns, dag, gamma), Error);
}

TEST(LinearizerTest, VerifyRespectsPathLimit) {
  const Dag dag = testing::Layered(8, 2);
  EXPECT_THROW(VerifyLinearization(dag, OrderDCost(2, dag.arc_universe()),
                                   LinearCost(dag.arc_universe()), 16),
               Error);
}

TEST(LinearizerTest, ParallelMatchesSerial) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const Dag dag = testing::Layered(4, 3);
    const NonbasicSystem ns = ChooseNonbasicSystem(dag);
    OrderDCost q = LinearAsOrderD(testing::RandomLinear(rng, dag), 2);
    if (i % 2) q = testing::RandomCost(rng, dag, 2, 0.1);
    const LinVerdict serial = Linearize(dag, q, ns);
    const LinVerdict parallel = Linearize(dag, q, ns, {.jobs = 4});
    ASSERT_EQ(serial.linearizable, parallel.linearizable);
    if (serial.linearizable) {
      EXPECT_EQ(*serial.cost, *parallel.cost);
    } else {
      EXPECT_EQ(serial.failure->arc, parallel.failure->arc);
      EXPECT_EQ(serial.failure->p, parallel.failure->p);
      EXPECT_EQ(serial.failure->q, parallel.failure->q);
    }
  }
}

TEST(LinearizerTest, VerdictsMatchBalanceCondition) {
  std::mt19937_64 rng(404);
  int yes = 0, no = 0;
  for (int i = 0; i < 200; ++i) {
    const Dag dag = testing::RandomDag(rng, 5, 8);
    const NonbasicSystem ns = ChooseNonbasicSystem(dag);
    const OrderDCost q = testing::RandomCost(rng, dag, 2 + i % 2, 0.15);
    const LinVerdict v = Linearize(dag, q, ns);
    if (v.linearizable) {
      ++yes;
      ASSERT_TRUE(EveryPathMatches(dag, q, *v.cost));
      for (ArcId a : dag.arcs()) {
        if (ns.is_nonbasic(a)) ASSERT_TRUE(v.cost->at(a).is_zero());
      }
    } else {
      ++no;
      const WitnessCosts w = EvaluateWitness(dag, q, *v.failure);
      ASSERT_NE(w.costs[0] + w.costs[3], w.costs[1] + w.costs[2]);
    }
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 10);
}

}  // namespace
}  // namespace linspp
