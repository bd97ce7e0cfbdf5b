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

#include <vector>

#include <gtest/gtest.h>

#include "linspp/error.h"
#include "test_util.h"

namespace linspp {
namespace {

using testing::AllPaths;
using testing::NaiveEval;
using testing::NaiveLinear;

TEST(CostsTest, EvalLinear) {
  LinearCost c(3);
  EXPECT_EQ(EvalLinear(c, {}), Rational(0));
  c.Set(1, 3);
  c.Set(2, 4);
  const std::vector<ArcId> p{1, 2};
  EXPECT_EQ(EvalLinear(c, p), Rational(7));
  c.Set(1, Rational(1, 2));
  c.Set(2, Rational(1, 3));
  EXPECT_EQ(EvalLinear(c, p), Rational(5, 6));
}

TEST(CostsTest, EvalOrderD) {
  OrderDCost q(1, 2);
  q.Set({}, 2);
  q.Set({1}, 5);
  const std::vector<ArcId> p1{1};
  EXPECT_EQ(EvalOrderD(q, p1), Rational(7));

  OrderDCost q2(2, 2);
  q2.Set({1}, 1);
  q2.Set({2}, 2);
  q2.Set({1, 2}, 3);
  const std::vector<ArcId> p{1, 2};
  EXPECT_EQ(EvalOrderD(q2, p), Rational(6));
}

TEST(CostsTest, SetRejectsOversizedKeysAndUnknownArcs) {
  OrderDCost q(2, 4);
  EXPECT_THROW(q.Set({1, 2, 3}, 1), Error);
  EXPECT_THROW(q.Set({5}, 1), Error);
  q.Set({1}, 3);
  q.Set({1}, 0);
  EXPECT_EQ(q.size(), 0u);
  LinearCost c(2);
  EXPECT_THROW(c.at(3), Error);
}

TEST(CostsTest, SparseEvalMatchesSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Dag dag = testing::RandomDag(rng, 5, 9);
    const int d = 1 + trial % 3;
    const OrderDCost q = testing::RandomCost(rng, dag, d, 0.6);
    for (const auto& p : AllPaths(dag)) {
      ASSERT_EQ(EvalOrderD(q, p), NaiveEval(q, p));
    }
  }
  const Dag dd = testing::DoubleDiamond();
  const OrderDCost q = testing::RandomCost(rng, dd, 3, 0.7);
  for (const auto& p : AllPaths(dd)) EXPECT_EQ(EvalOrderD(q, p), NaiveEval(q, p));
}

TEST(CostsTest, ReduceFormDiamond) {
  const Dag dag = testing::Diamond();
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  LinearCost c(4);
  for (ArcId a = 1; a <= 4; ++a) c.Set(a, 1);
  const LinearCost r = ReduceForm(c, ns, dag);
  EXPECT_EQ(r.at(1), Rational(2));
  EXPECT_EQ(r.at(2), Rational(2));
  EXPECT_EQ(r.at(3), Rational(0));
  EXPECT_EQ(r.at(4), Rational(0));
  EXPECT_EQ(ReduceForm(r, ns, dag), r);
}

TEST(CostsTest, ReduceFormSinglePathPushesToSourceArc) {
  const Arc arcs[] = {{0, 1}, {1, 2}, {2, 3}};
  const Dag dag = Dag::Build(4, arcs, 0, 3);
  LinearCost c(3);
  c.Set(1, Rational(1, 2));
  c.Set(2, -4);
  c.Set(3, 7);
  const LinearCost r = ReduceForm(c, ChooseNonbasicSystem(dag), dag);
  EXPECT_EQ(r.at(1), Rational(7, 2));
  EXPECT_EQ(r.at(2), Rational(0));
  EXPECT_EQ(r.at(3), Rational(0));
}

TEST(CostsTest, ReduceFormPreservesPathCostsAndZeroesNonbasic) {
  std::mt19937_64 rng(23);
  std::vector<Dag> graphs{testing::DoubleDiamond(), testing::Layered(6, 2),
                          testing::Layered(4, 3)};
  for (int i = 0; i < 10; ++i) graphs.push_back(testing::RandomDag(rng, 6, 11));
  for (const Dag& dag : graphs) {
    const NonbasicSystem ns = ChooseNonbasicSystem(dag);
    const LinearCost c = testing::RandomLinear(rng, dag);
    const LinearCost r = ReduceForm(c, ns, dag);
    for (ArcId a : dag.arcs()) {
      if (ns.is_nonbasic(a)) ASSERT_TRUE(r.at(a).is_zero());
    }
    for (const auto& p : AllPaths(dag)) {
      ASSERT_EQ(NaiveLinear(r, p), NaiveLinear(c, p));
    }
  }
}

TEST(CostsTest, LinearAsOrderD) {
  std::mt19937_64 rng(3);
  const Dag dag = testing::DoubleDiamond();
  const LinearCost c = testing::RandomLinear(rng, dag);
  for (int d = 1; d <= 3; ++d) {
    const OrderDCost q = LinearAsOrderD(c, d);
    EXPECT_EQ(q.order(), d);
    EXPECT_TRUE(q.at({}).is_zero());
    for (const auto& p : AllPaths(dag)) {
      EXPECT_EQ(NaiveEval(q, p), NaiveLinear(c, p));
    }
  }
  EXPECT_EQ(LinearAsOrderD(LinearCost(8), 2).size(), 0u);
}

}  // namespace
}  // namespace linspp
