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

// Text formats. Instance files look like
//
//   p linspp <n> <m> <d>
//   s <vertex>
//   t <vertex>
//   a <arc_id> <tail> <head>          (m lines, ids 1..m)
//   q <k> <arc_1> ... <arc_k> <value> (any number, 0 <= k <= d)
//
// with `#` comments. Vertex tokens are labels: if all of them are integers in
// [0, n) they are used as ids directly, otherwise ids are assigned in order
// of first appearance.

#ifndef LINSPP_INSTANCE_IO_H_
#define LINSPP_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "linspp/costs.h"
#include "linspp/graph.h"

namespace linspp {

struct Instance {
  // Pruned to the arcs on source-sink paths.
  Dag dag;
  OrderDCost cost;
  // Label of every vertex id.
  std::vector<std::string> labels;
  // Cost keys dropped because they mention pruned arcs, and similar notes.
  std::vector<std::string> warnings;
};

// Throws ParseError, Error(kDuplicateCostKey), Error(kArcIdOutOfRange),
// Error(kCycleDetected), Error(kNoStPath) and friends.
Instance ParseInstance(std::string_view text);
// As ParseInstance; Error(kIoError) if the file cannot be read.
Instance ReadInstance(const std::string& path);

// Canonical text: every arc of the universe, nonzero costs in ascending key
// order. Parsing the result yields the same instance.
std::string FormatInstance(const Dag& dag, const OrderDCost& q,
                           const std::vector<std::string>& labels = {});

// `c <arc_id> <value>` for every active arc, ascending.
std::string FormatCostFile(const Dag& dag, const LinearCost& c);
// Arcs not listed cost zero. Throws ParseError, Error(kUnknownArc).
LinearCost ParseCostFile(std::string_view text, int arc_universe);

// One vector per line as space-separated `subset=value` pairs, subsets as
// comma-joined arc ids (empty for the empty set). Zero entries are omitted.
std::string FormatBasis(const std::vector<ArcSet>& coordinates,
                        const std::vector<std::vector<Rational>>& basis);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace linspp

#endif  // LINSPP_INSTANCE_IO_H_
