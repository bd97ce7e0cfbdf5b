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

#include "linspp/oracle.h"

#include <set>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "linspp/error.h"
#include "linspp/linearizer.h"
#include "test_util.h"

namespace linspp {
namespace {

using testing::AllPaths;
using testing::NaiveEval;

Path P(VertexId from, std::vector<ArcId> arcs) { return Path{from, std::move(arcs)}; }

// The system at u in the double diamond.
TwoPathSystem DdSystem() {
  return TwoPathSystem{testing::kDdU, P(0, {1, 3}), P(0, {2, 4}), P(3, {5, 8}),
                       P(3, {6, 7})};
}

OrderDCost DdCounterexample() {
  OrderDCost q(2, 8);
  q.Set({testing::kDdX1U, testing::kDdUY1}, 1);
  return q;
}

TEST(OracleTest, TwoPathLinearizable) {
  const Dag dag = testing::DoubleDiamond();
  TwoPathSystem degenerate = DdSystem();
  degenerate.p2 = degenerate.p1;
  EXPECT_TRUE(TwoPathLinearizable(dag, degenerate, DdCounterexample()));
  EXPECT_FALSE(TwoPathLinearizable(dag, DdSystem(), DdCounterexample()));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const OrderDCost q = LinearAsOrderD(testing::RandomLinear(rng, dag), 2);
    EXPECT_TRUE(TwoPathLinearizable(dag, DdSystem(), q));
  }
}

TEST(OracleTest, EnumerateSingleArc) {
  const auto systems = EnumerateTwoPathSystems(testing::SingleArc(), 100);
  ASSERT_EQ(systems.size(), 2u);
  std::set<VertexId> at;
  for (const auto& t : systems) {
    at.insert(t.v);
    EXPECT_EQ(t.p1, t.p2);
    EXPECT_EQ(t.q1, t.q2);
  }
  EXPECT_EQ(at, (std::set<VertexId>{0, 1}));
}

// Hand count: at every vertex v, (#s-v paths choose 2 with repetition) times
// (#v-t paths choose 2 with repetition).
std::uint64_t HandCount(const Dag& dag) {
  std::uint64_t total = 0;
  for (VertexId v : dag.vertices()) {
    const std::uint64_t a = AllPaths(dag, dag.source(), v).size();
    const std::uint64_t b = AllPaths(dag, v, dag.sink()).size();
    total += a * (a + 1) / 2 * (b * (b + 1) / 2);
  }
  return total;
}

TEST(OracleTest, EnumerationCountsMatchHandCount) {
  const Dag diamond = testing::Diamond();
  const auto systems = EnumerateTwoPathSystems(diamond, 1000);
  EXPECT_EQ(systems.size(), HandCount(diamond));
  EXPECT_EQ(CountTwoPathSystems(diamond, 1000), HandCount(diamond));
  // s: 1 x 3, u and w: 1 x 1, t: 3 x 1.
  EXPECT_EQ(systems.size(), 8u);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    const Dag dag = testing::RandomDag(rng, 6, 10);
    EXPECT_EQ(CountTwoPathSystems(dag, ~0ull), HandCount(dag));
    EXPECT_EQ(EnumerateTwoPathSystems(dag, ~0ull).size(), HandCount(dag));
  }
  EXPECT_THROW(EnumerateTwoPathSystems(testing::Layered(6, 2), 10), Error);
}

TEST(OracleTest, DoubleDiamondContainsSystemAtU) {
  const auto systems = EnumerateTwoPathSystems(testing::DoubleDiamond(), 1000);
  bool found = false;
  const TwoPathSystem want = DdSystem();
  for (const auto& t : systems) {
    const bool same_p = (t.p1 == want.p1 && t.p2 == want.p2) ||
                        (t.p1 == want.p2 && t.p2 == want.p1);
    const bool same_q = (t.q1 == want.q1 && t.q2 == want.q2) ||
                        (t.q1 == want.q2 && t.q2 == want.q1);
    found |= t.v == want.v && same_p && same_q;
  }
  EXPECT_TRUE(found);
}

TEST(OracleTest, SwapInvariance) {
  std::mt19937_64 rng(12);
  const Dag dag = testing::DoubleDiamond();
  for (int i = 0; i < 50; ++i) {
    const OrderDCost q = testing::RandomCost(rng, dag, 2, 0.3);
    TwoPathSystem t = DdSystem();
    const bool base = TwoPathLinearizable(dag, t, q);
    std::swap(t.p1, t.p2);
    EXPECT_EQ(TwoPathLinearizable(dag, t, q), base);
    std::swap(t.q1, t.q2);
    EXPECT_EQ(TwoPathLinearizable(dag, t, q), base);
  }
}

TEST(OracleTest, LpDiamondMatchesLinearizer) {
  const Dag dag = testing::Diamond();
  OrderDCost q(2, 4);
  q.Set({1}, 1);
  q.Set({3}, 2);
  q.Set({1, 3}, 3);
  const LpVerdict lp = OracleLinearizeLp(dag, q, 100);
  ASSERT_TRUE(lp.linearizable);
  const LinVerdict lin = Linearize(dag, q, ChooseNonbasicSystem(dag));
  EXPECT_EQ(*lp.cost, *lin.cost);
  const LpVerdict zero = OracleLinearizeLp(dag, OrderDCost(2, 4), 100);
  ASSERT_TRUE(zero.linearizable);
  EXPECT_EQ(*zero.cost, LinearCost(4));
}

TEST(OracleTest, LpRejectsCounterexampleWithCertificate) {
  const Dag dag = testing::DoubleDiamond();
  const OrderDCost q = DdCounterexample();
  const LpVerdict lp = OracleLinearizeLp(dag, q, 100);
  ASSERT_FALSE(lp.linearizable);
  ASSERT_TRUE(lp.certificate.has_value());
  const auto& y = *lp.certificate;
  ASSERT_EQ(y.size(), lp.paths.size());
  // sum y_i [P_i] = 0 as arc-incidence vectors, sum y_i f(P_i) != 0.
  std::vector<Rational> incidence(dag.arc_universe() + 1);
  Rational weighted;
  for (size_t i = 0; i < y.size(); ++i) {
    for (ArcId a : lp.paths[i].arcs) incidence[a] += y[i];
    weighted += y[i] * NaiveEval(q, lp.paths[i].arcs);
  }
  for (const Rational& r : incidence) EXPECT_TRUE(r.is_zero());
  EXPECT_FALSE(weighted.is_zero());
}

TEST(OracleTest, TpsVerdicts) {
  const Dag diamond = testing::Diamond();
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(OracleLinearizeTps(
        diamond, testing::RandomCost(rng, diamond, 2, 0.8), 1000));
  }
  EXPECT_FALSE(
      OracleLinearizeTps(testing::DoubleDiamond(), DdCounterexample(), 1000));
}

TEST(OracleTest, TpsAgreesWithLp) {
  std::mt19937_64 rng(14);
  int yes = 0, no = 0;
  for (int i = 0; i < 200; ++i) {
    const Dag dag = testing::RandomDag(rng, 4 + i % 3, 8);
    const OrderDCost q = testing::RandomCost(rng, dag, 2 + i % 2, 0.1);
    const bool lp = OracleLinearizeLp(dag, q, 1024).linearizable;
    ASSERT_EQ(OracleLinearizeTps(dag, q, 1u << 20), lp) << i;
    (lp ? yes : no)++;
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 10);
}

TEST(OracleTest, TwoPathLinearizingCost) {
  const Dag dag = testing::DoubleDiamond();
  const TwoPathSystem t = DdSystem();
  // All zero.
  const LinearCost zero = TwoPathLinearizingCost(dag, t, OrderDCost(2, 8));
  EXPECT_EQ(zero, LinearCost(8));
  // A linearizable q: the cost must reproduce all four path costs.
  std::mt19937_64 rng(15);
  for (int i = 0; i < 20; ++i) {
    const OrderDCost q = LinearAsOrderD(testing::RandomLinear(rng, dag), 2);
    const LinearCost c = TwoPathLinearizingCost(dag, t, q);
    for (const Path* p : {&t.p1, &t.p2}) {
      for (const Path* r : {&t.q1, &t.q2}) {
        const Path whole = testing::Join(*p, *r);
        EXPECT_EQ(testing::NaiveLinear(c, whole.arcs), NaiveEval(q, whole.arcs));
      }
    }
  }
  // Degenerate tail: two independent values.
  TwoPathSystem d = t;
  d.q2 = d.q1;
  OrderDCost q(2, 8);
  q.Set({1}, 4);
  q.Set({2, 4}, -3);
  const LinearCost c = TwoPathLinearizingCost(dag, d, q);
  EXPECT_EQ(testing::NaiveLinear(c, testing::Join(d.p1, d.q1).arcs), Rational(4));
  EXPECT_EQ(testing::NaiveLinear(c, testing::Join(d.p2, d.q1).arcs), Rational(-3));
}

TEST(OracleTest, TooManySystems) {
  const Dag dag = testing::Layered(8, 2);
  EXPECT_THROW(OracleLinearizeTps(dag, OrderDCost(2, dag.arc_universe()), 100),
               Error);
}

}  // namespace
}  // namespace linspp
