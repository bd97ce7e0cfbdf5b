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

// Seeded instance generators. The output depends only on the spec, never on
// the platform's standard library distributions.

#ifndef LINSPP_GENERATOR_H_
#define LINSPP_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "linspp/instance_io.h"

namespace linspp {

enum class Family { kRandomDag, kLayered, kGrid, kTwoPath, kDoubleDiamond };
enum class Mode { kArbitrary, kLinearizable, kNonLinearizable };

std::optional<Family> FamilyFromName(std::string_view name);
std::optional<Mode> ModeFromName(std::string_view name);
std::string_view FamilyName(Family family);
std::string_view ModeName(Mode mode);

struct GeneratorSpec {
  Family family = Family::kRandomDag;
  Mode mode = Mode::kArbitrary;
  int order = 2;
  // random-dag: arc count; layered: target arc count, 0 for complete layers.
  int arcs = 10;
  // random-dag: vertex count, 0 picks arcs / 2 + 1. layered: layer count,
  // used when arcs is 0.
  int vertices = 0;
  int width = 2;           // layered
  int rows = 3;            // grid
  int cols = 3;            // grid
  int segment = 2;         // two-path: length of each of the four branches
  int max_numerator = 9;   // values are n / k, |n| <= max_numerator, k in 1..3
  double density = 0.5;    // share of optional cost keys that get a value
  std::uint64_t seed = 1;
};

// A violation planted in non-linearizable mode: delta was added to the cost
// of {partner, arc}. `arc` is strongly basic and `partner` enters a vertex
// with a second incoming arc, both on source paths to the tail of `arc`, so
// the value of `arc` differs between paths through and around `partner`.
struct PlantedViolation {
  ArcId arc = kNoArc;
  ArcId partner = kNoArc;
  Rational delta;
};

struct Generated {
  Instance instance;
  std::optional<PlantedViolation> planted;
};

// Throws Error(kUnsupportedParams).
Generated Generate(const GeneratorSpec& spec);

// Instance text plus a comment line describing the planted violation.
std::string FormatGenerated(const Generated& generated);
std::string PlantedComment(const PlantedViolation& planted);

}  // namespace linspp

#endif  // LINSPP_GENERATOR_H_
