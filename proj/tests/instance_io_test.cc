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

#include "linspp/instance_io.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "linspp/error.h"
#include "test_util.h"

#ifndef LINSPP_FIXTURE_DIR
#error "LINSPP_FIXTURE_DIR must be defined"
#endif

namespace linspp {
namespace {

std::string Fixture(const std::string& name) {
  return std::string(LINSPP_FIXTURE_DIR) + "/" + name;
}

ErrorCode ParseCode(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

std::vector<ArcId> Ids(const Dag& dag) {
  return {dag.arcs().begin(), dag.arcs().end()};
}

TEST(InstanceIoTest, SingleArcFile) {
  const Instance inst =
      ParseInstance("p linspp 2 1 2\ns 0\nt 1\na 1 0 1\nq 1 1 5\n");
  EXPECT_EQ(inst.dag.arc_count(), 1);
  EXPECT_TRUE(inst.cost.at({}).is_zero());
  EXPECT_EQ(inst.cost.at({1}), Rational(5));
  EXPECT_EQ(inst.cost.order(), 2);
}

TEST(InstanceIoTest, RepeatedArcInKey) {
  EXPECT_EQ(ParseCode(ReadFile(Fixture("repeated_key.lin"))),
            ErrorCode::kParseError);
  EXPECT_THROW(ReadInstance(Fixture("repeated_key.lin")), Error);
}

TEST(InstanceIoTest, DiamondFixtureMatchesConstruction) {
  const Instance inst = ReadInstance(Fixture("diamond.lin"));
  const Dag ref = testing::Diamond();
  ASSERT_EQ(Ids(inst.dag), Ids(ref));
  for (ArcId a : ref.arcs()) {
    EXPECT_EQ(inst.dag.arc(a).tail, ref.arc(a).tail);
    EXPECT_EQ(inst.dag.arc(a).head, ref.arc(a).head);
  }
  EXPECT_EQ(inst.dag.source(), ref.source());
  EXPECT_EQ(inst.dag.sink(), ref.sink());
  OrderDCost q(2, 4);
  q.Set({1}, 1);
  q.Set({3}, 2);
  q.Set({1, 3}, 3);
  EXPECT_EQ(inst.cost, q);
}

TEST(InstanceIoTest, SymbolicLabels) {
  const Instance inst = ReadInstance(Fixture("double_diamond_nonlin.lin"));
  EXPECT_EQ(inst.dag.arc_count(), 8);
  EXPECT_EQ(inst.labels[inst.dag.source()], "s");
  EXPECT_EQ(inst.labels[inst.dag.sink()], "t");
  EXPECT_EQ(inst.cost.at({3, 6}), Rational(1));
}

TEST(InstanceIoTest, RoundTrip) {
  for (const char* name : {"diamond.lin", "double_diamond_nonlin.lin",
                           "layered_lin.lin", "random_lin.lin",
                           "grid_nonlin.lin", "single_arc.lin"}) {
    const Instance a = ReadInstance(Fixture(name));
    const std::string text = FormatInstance(a.dag, a.cost, a.labels);
    const Instance b = ParseInstance(text);
    EXPECT_EQ(Ids(a.dag), Ids(b.dag)) << name;
    EXPECT_EQ(a.cost, b.cost) << name;
    EXPECT_EQ(a.labels, b.labels) << name;
    EXPECT_EQ(FormatInstance(b.dag, b.cost, b.labels), text) << name;
  }
}

TEST(InstanceIoTest, Errors) {
  EXPECT_EQ(ParseCode(""), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("p linspp 2 1 2\ns 0\nt 1\na 1 0 1\nq 3 1 1 1 1\n"),
            ErrorCode::kOrderMismatch);
  EXPECT_EQ(ParseCode("p linspp 2 1 2\ns 0\nt 1\na 1 0 1\nq 1 2 1\n"),
            ErrorCode::kArcIdOutOfRange);
  EXPECT_EQ(ParseCode("p linspp 2 1 2\ns 0\nt 1\na 1 0 1\nq 1 1 1\nq 1 1 2\n"),
            ErrorCode::kDuplicateCostKey);
  EXPECT_EQ(ParseCode("p linspp 2 1 2\ns 0\nt 1\na 1 0 1\nq 1 1 x\n"),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("p linspp 2 2 2\ns 0\nt 1\na 1 0 1\na 2 1 0\n"),
            ErrorCode::kCycleDetected);
  EXPECT_EQ(ParseCode("p linspp 3 1 2\ns 0\nt 2\na 1 0 1\n"),
            ErrorCode::kNoStPath);
  try {
    ParseInstance("p linspp 2 1 2\ns 0\nt 1\na 1 0 1\nq 1 1 x\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
}

TEST(InstanceIoTest, PrunedArcsWarn) {
  const Instance inst = ParseInstance(
      "p linspp 3 2 2\ns 0\nt 1\na 1 0 1\na 2 0 2\nq 1 2 4\nq 1 1 3\n");
  EXPECT_EQ(inst.dag.arc_count(), 1);
  EXPECT_FALSE(inst.warnings.empty());
  EXPECT_EQ(inst.cost.size(), 1u);
}

TEST(InstanceIoTest, CostFile) {
  const Dag dag = testing::Diamond();
  LinearCost c(4);
  c.Set(1, Rational(-7, 2));
  c.Set(4, 3);
  const std::string text = FormatCostFile(dag, c);
  EXPECT_NE(text.find("c 1 -7/2"), std::string::npos);
  EXPECT_EQ(ParseCostFile(text, 4), c);
  EXPECT_THROW(ParseCostFile("c 9 1\n", 4), Error);
  EXPECT_THROW(ParseCostFile("c 1 abc\n", 4), Error);
}

TEST(InstanceIoTest, BasisFormat) {
  const std::vector<ArcSet> coords{ArcSet{}, ArcSet{1}, ArcSet{1, 2}};
  const std::vector<std::vector<Rational>> basis{
      {Rational(1), Rational(0), Rational(1, 2)}};
  EXPECT_EQ(FormatBasis(coords, basis), "=1 1,2=1/2\n");
}

TEST(InstanceIoTest, MissingFile) {
  try {
    ReadInstance(Fixture("does_not_exist.lin"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace linspp
