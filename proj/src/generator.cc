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

#include "linspp/generator.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "linspp/error.h"
#include "linspp/subspace.h"

namespace linspp {
namespace {

// Up to this many coordinates, linearizable instances are drawn from the
// span of a computed basis and arbitrary ones fill every coordinate.
constexpr size_t kSmallBasis = 300;
constexpr size_t kSmallDense = 4096;

// mt19937_64 is specified bit for bit; the std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }
  std::int64_t Between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool Chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

Rational RandomValue(Rng& rng, int max_numerator, bool nonzero) {
  std::int64_t num;
  do {
    num = rng.Between(-max_numerator, max_numerator);
  } while (nonzero && num == 0);
  return Rational(num, rng.Between(1, 3));
}

struct Shape {
  int vertices = 0;
  std::vector<Arc> arcs;
  VertexId source = 0;
  VertexId sink = 0;
};

[[noreturn]] void Unsupported(const std::string& message) {
  throw Error(ErrorCode::kUnsupportedParams, message);
}

Shape RandomDagShape(const GeneratorSpec& spec, Rng& rng) {
  const int m = spec.arcs;
  const int n = spec.vertices > 0 ? spec.vertices : m / 2 + 1;
  if (n < 2 || m < n - 1) {
    Unsupported("random-dag needs at least 2 vertices and vertices - 1 arcs");
  }
  Shape shape{n, {}, 0, n - 1};
  for (int v = 0; v + 1 < n; ++v) shape.arcs.push_back({v, v + 1});
  while (static_cast<int>(shape.arcs.size()) < m) {
    const auto tail = static_cast<VertexId>(rng.Between(0, n - 2));
    const auto head = static_cast<VertexId>(rng.Between(tail + 1, n - 1));
    shape.arcs.push_back({tail, head});
  }
  return shape;
}

Shape LayeredShape(const GeneratorSpec& spec) {
  const int w = spec.width;
  if (w < 1) Unsupported("layered needs width >= 1");
  auto full = [&](long long layers) { return 2LL * w + (layers - 1) * w * w; };
  auto sparse = [&](long long layers) { return 2LL * w + (layers - 1) * w; };
  long long layers = spec.vertices;
  if (spec.arcs > 0) {
    layers = 1;
    while (full(layers) < spec.arcs) ++layers;
    if (sparse(layers) > spec.arcs) {
      Unsupported("no layered graph of width " + std::to_string(w) +
                  " has exactly " + std::to_string(spec.arcs) + " arcs");
    }
  } else if (layers < 1) {
    Unsupported("layered needs --arcs or a layer count");
  }
  long long excess = spec.arcs > 0 ? full(layers) - spec.arcs : 0;

  auto id = [&](long long layer, int i) {
    return static_cast<VertexId>(1 + (layer - 1) * w + i);
  };
  const auto sink = static_cast<VertexId>(1 + layers * w);
  std::vector<std::vector<Arc>> gaps(layers - 1);
  for (long long g = layers - 1; g-- > 0;) {
    // Later gaps lose their crossing arcs first.
    std::vector<char> keep(static_cast<size_t>(w) * w, 1);
    for (int k = w * w - 1; k >= 0 && excess > 0; --k) {
      if (k / w != k % w) {
        keep[k] = 0;
        --excess;
      }
    }
    for (int i = 0; i < w; ++i) {
      for (int j = 0; j < w; ++j) {
        if (keep[i * w + j]) gaps[g].push_back({id(g + 1, i), id(g + 2, j)});
      }
    }
  }
  Shape shape{sink + 1, {}, 0, sink};
  for (int i = 0; i < w; ++i) shape.arcs.push_back({0, id(1, i)});
  for (const auto& gap : gaps) {
    shape.arcs.insert(shape.arcs.end(), gap.begin(), gap.end());
  }
  for (int i = 0; i < w; ++i) shape.arcs.push_back({id(layers, i), sink});
  return shape;
}

Shape GridShape(const GeneratorSpec& spec) {
  const int r = spec.rows, c = spec.cols;
  if (r < 1 || c < 1 || r * c < 2) Unsupported("grid needs at least 2 cells");
  Shape shape{r * c, {}, 0, r * c - 1};
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      const VertexId v = i * c + j;
      if (j + 1 < c) shape.arcs.push_back({v, v + 1});
      if (i + 1 < r) shape.arcs.push_back({v, v + c});
    }
  }
  return shape;
}

Shape TwoPathShape(const GeneratorSpec& spec) {
  const int k = spec.segment;
  if (k < 1) Unsupported("two-path needs segment >= 1");
  Shape shape{3, {}, 0, 2};
  auto branch = [&](VertexId from, VertexId to) {
    VertexId prev = from;
    for (int i = 1; i < k; ++i) {
      const VertexId next = shape.vertices++;
      shape.arcs.push_back({prev, next});
      prev = next;
    }
    shape.arcs.push_back({prev, to});
  };
  branch(0, 1);
  branch(0, 1);
  branch(1, 2);
  branch(1, 2);
  return shape;
}

Shape DoubleDiamondShape() {
  return Shape{7,
               {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 5}, {3, 4}, {4, 6}, {5, 6}},
               0,
               6};
}

// reach[v] has bit x set iff x is reachable from v.
std::vector<std::vector<std::uint64_t>> Reachability(const Dag& dag) {
  const int n = dag.vertex_count();
  const size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(
      n, std::vector<std::uint64_t>(words, 0));
  const auto order = dag.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& mine = reach[*it];
    mine[*it / 64] |= std::uint64_t{1} << (*it % 64);
    for (ArcId a : dag.out_arcs(*it)) {
      const auto& theirs = reach[dag.arc(a).head];
      for (size_t i = 0; i < words; ++i) mine[i] |= theirs[i];
    }
  }
  return reach;
}

// Level of every vertex if each arc climbs exactly one level, else empty.
std::vector<int> Levels(const Dag& dag) {
  std::vector<int> level(dag.vertex_count(), -1);
  level[dag.source()] = 0;
  for (VertexId v : dag.vertices()) {
    for (ArcId a : dag.out_arcs(v)) {
      int& h = level[dag.arc(a).head];
      if (h >= 0 && h != level[v] + 1) return {};
      h = level[v] + 1;
    }
  }
  return level;
}

OrderDCost RandomCost(const GeneratorSpec& spec, const Dag& dag, Rng& rng) {
  OrderDCost q(spec.order, dag.arc_universe());
  const CoordinateIndex index(dag, spec.order);
  if (index.size() <= kSmallDense) {
    for (size_t i = 0; i < index.size(); ++i) {
      if (rng.Chance(spec.density)) {
        q.Set(index.set(i), RandomValue(rng, spec.max_numerator, true));
      }
    }
    return q;
  }
  const auto arcs = dag.arcs();
  q.Set(ArcSet(), RandomValue(rng, spec.max_numerator, false));
  for (ArcId a : arcs) q.Set(ArcSet{a}, RandomValue(rng, spec.max_numerator, false));
  for (size_t i = 0; i < 4 * arcs.size(); ++i) {
    const int k = static_cast<int>(rng.Between(2, spec.order));
    std::vector<ArcId> ids;
    while (static_cast<int>(ids.size()) < k) {
      const ArcId a = arcs[rng.Below(arcs.size())];
      if (std::find(ids.begin(), ids.end(), a) == ids.end()) ids.push_back(a);
    }
    q.Set(ArcSet::FromIds(ids), RandomValue(rng, spec.max_numerator, true));
  }
  return q;
}

OrderDCost LinearizableCost(const GeneratorSpec& spec, const Dag& dag,
                            Rng& rng) {
  const CoordinateIndex index(dag, spec.order);
  if (index.size() <= kSmallBasis) {
    const auto basis = KernelBasis(AssembleMatrix(dag, index));
    std::vector<Rational> x(index.size());
    for (const auto& b : basis) {
      const Rational lambda(rng.Between(-3, 3));
      if (lambda.is_zero()) continue;
      for (size_t i = 0; i < x.size(); ++i) {
        if (!b[i].is_zero()) x[i] += lambda * b[i];
      }
    }
    return index.ToCost(x);
  }

  // Linear part, then keys that never lie on one path together, then (on
  // graded graphs) pair costs spread evenly over a whole level gap.
  OrderDCost q(spec.order, dag.arc_universe());
  const auto arcs = dag.arcs();
  q.Set(ArcSet(), RandomValue(rng, spec.max_numerator, false));
  for (ArcId a : arcs) q.Set(ArcSet{a}, RandomValue(rng, spec.max_numerator, false));
  if (spec.order == 1) return q;

  const auto reach = Reachability(dag);
  auto reaches = [&](VertexId from, VertexId to) {
    return (reach[from][to / 64] >> (to % 64)) & 1;
  };
  auto together = [&](ArcId a, ArcId b) {
    return reaches(dag.arc(a).head, dag.arc(b).tail) ||
           reaches(dag.arc(b).head, dag.arc(a).tail);
  };
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (!rng.Chance(spec.density)) continue;
    const ArcId a = arcs[rng.Below(arcs.size())];
    const ArcId b = arcs[rng.Below(arcs.size())];
    if (a == b || together(a, b)) continue;
    ArcSet key = ArcSet{a}.With(b);
    if (spec.order >= 3 && rng.Chance(0.5)) {
      const ArcId c = arcs[rng.Below(arcs.size())];
      if (!key.contains(c)) key = key.With(c);
    }
    q.Add(key, RandomValue(rng, spec.max_numerator, true));
  }

  const auto level = Levels(dag);
  if (level.empty()) return q;
  const int depth = level[dag.sink()];
  std::vector<std::vector<ArcId>> gaps(depth);
  for (ArcId a : arcs) gaps[level[dag.arc(a).tail]].push_back(a);
  for (ArcId a : arcs) {
    const int own = level[dag.arc(a).tail];
    for (int g = 0; g < depth; ++g) {
      if (g == own || !rng.Chance(spec.density)) continue;
      const Rational w = RandomValue(rng, spec.max_numerator, true);
      for (ArcId b : gaps[g]) q.Add(ArcSet{a}.With(b), w);
    }
  }
  return q;
}

// True when some strongly basic arc has two distinct paths from the source.
bool Plantable(const Dag& dag) {
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  for (ArcId a : dag.arcs()) {
    if (dag.arc(a).tail == dag.source() || ns.is_nonbasic(a)) continue;
    if (CountPaths(RestrictToPrefix(dag, dag.arc(a).tail), 2) >= 2) return true;
  }
  return false;
}

PlantedViolation Plant(const GeneratorSpec& spec, const Dag& dag, Rng& rng) {
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  std::vector<ArcId> strongly_basic;
  for (ArcId a : dag.arcs()) {
    if (dag.arc(a).tail != dag.source() && !ns.is_nonbasic(a)) {
      strongly_basic.push_back(a);
    }
  }
  for (size_t i = strongly_basic.size(); i > 1; --i) {
    std::swap(strongly_basic[i - 1], strongly_basic[rng.Below(i)]);
  }
  for (ArcId a : strongly_basic) {
    const Dag prefix = RestrictToPrefix(dag, dag.arc(a).tail);
    std::vector<ArcId> partners;
    for (VertexId w : prefix.vertices()) {
      const auto in = prefix.in_arcs(w);
      if (in.size() >= 2) partners.insert(partners.end(), in.begin(), in.end());
    }
    if (partners.empty()) continue;
    return PlantedViolation{a, partners[rng.Below(partners.size())],
                            RandomValue(rng, spec.max_numerator, true)};
  }
  Unsupported("graph has no strongly basic arc with two distinct source paths");
}

}  // namespace

std::optional<Family> FamilyFromName(std::string_view name) {
  if (name == "random-dag") return Family::kRandomDag;
  if (name == "layered") return Family::kLayered;
  if (name == "grid") return Family::kGrid;
  if (name == "two-path") return Family::kTwoPath;
  if (name == "double-diamond") return Family::kDoubleDiamond;
  return std::nullopt;
}

std::optional<Mode> ModeFromName(std::string_view name) {
  if (name == "arbitrary") return Mode::kArbitrary;
  if (name == "linearizable") return Mode::kLinearizable;
  if (name == "non-linearizable") return Mode::kNonLinearizable;
  return std::nullopt;
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kRandomDag: return "random-dag";
    case Family::kLayered: return "layered";
    case Family::kGrid: return "grid";
    case Family::kTwoPath: return "two-path";
    case Family::kDoubleDiamond: return "double-diamond";
  }
  return "?";
}

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kArbitrary: return "arbitrary";
    case Mode::kLinearizable: return "linearizable";
    case Mode::kNonLinearizable: return "non-linearizable";
  }
  return "?";
}

Generated Generate(const GeneratorSpec& spec) {
  if (spec.order < 1 || spec.order > kMaxOrder) {
    Unsupported("order must lie in [1, " + std::to_string(kMaxOrder) + "]");
  }
  if (spec.max_numerator < 1) Unsupported("max numerator must be positive");
  if (!(spec.density >= 0 && spec.density <= 1)) {
    Unsupported("density must lie in [0, 1]");
  }
  if (spec.mode == Mode::kNonLinearizable && spec.order < 2) {
    Unsupported("every order-1 instance is linearizable");
  }
  Rng rng(spec.seed);
  Shape shape;
  switch (spec.family) {
    case Family::kRandomDag: shape = RandomDagShape(spec, rng); break;
    case Family::kLayered: shape = LayeredShape(spec); break;
    case Family::kGrid: shape = GridShape(spec); break;
    case Family::kTwoPath: shape = TwoPathShape(spec); break;
    case Family::kDoubleDiamond: shape = DoubleDiamondShape(); break;
  }
  Dag dag = PruneToCovered(
      Dag::Build(shape.vertices, shape.arcs, shape.source, shape.sink));
  // Random graphs too sparse to carry a violation are redrawn.
  for (int attempt = 0; spec.family == Family::kRandomDag &&
                        spec.mode == Mode::kNonLinearizable &&
                        attempt < 64 && !Plantable(dag);
       ++attempt) {
    shape = RandomDagShape(spec, rng);
    dag = PruneToCovered(
        Dag::Build(shape.vertices, shape.arcs, shape.source, shape.sink));
  }
  std::vector<std::string> labels;
  for (int v = 0; v < shape.vertices; ++v) labels.push_back(std::to_string(v));

  Generated out{Instance{dag, OrderDCost(spec.order, dag.arc_universe()),
                         std::move(labels), {}},
                std::nullopt};
  OrderDCost& q = out.instance.cost;
  switch (spec.mode) {
    case Mode::kArbitrary:
      q = RandomCost(spec, dag, rng);
      break;
    case Mode::kLinearizable:
      q = LinearizableCost(spec, dag, rng);
      break;
    case Mode::kNonLinearizable:
      if (spec.family == Family::kDoubleDiamond) {
        // The smallest counterexample: one pair cost on the crossing paths.
        out.planted = PlantedViolation{6, 3, Rational(1)};
      } else {
        q = LinearizableCost(spec, dag, rng);
        out.planted = Plant(spec, dag, rng);
      }
      q.Add(ArcSet{out.planted->arc}.With(out.planted->partner),
            out.planted->delta);
      break;
  }
  return out;
}

std::string FormatGenerated(const Generated& generated) {
  std::string text = FormatInstance(generated.instance.dag,
                                    generated.instance.cost,
                                    generated.instance.labels);
  if (generated.planted) text += PlantedComment(*generated.planted);
  return text;
}

std::string PlantedComment(const PlantedViolation& planted) {
  std::ostringstream note;
  note << "# planted arc " << planted.arc << " partner " << planted.partner
       << " delta " << planted.delta << '\n';
  return note.str();
}

}  // namespace linspp
