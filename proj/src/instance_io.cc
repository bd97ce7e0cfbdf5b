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

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "linspp/error.h"

namespace linspp {
namespace {

// Splits `text` into lines of whitespace-separated tokens, comments removed.
// Blank lines are kept as empty token lists so line numbers stay right.
std::vector<std::vector<std::string>> Tokenize(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::optional<long long> ToInt(std::string_view s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

long long IntOrThrow(std::string_view s, int line, const char* what) {
  const auto value = ToInt(s);
  if (!value) {
    throw ParseError(ErrorCode::kParseError, line,
                     std::string("expected integer ") + what + ", got '" +
                         std::string(s) + "'");
  }
  return *value;
}

Rational RationalOrThrow(std::string_view s, int line) {
  auto value = Rational::FromString(s);
  if (!value) {
    throw ParseError(ErrorCode::kParseError, line,
                     "malformed rational '" + std::string(s) + "'");
  }
  return *std::move(value);
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const auto lines = Tokenize(text);
  bool have_header = false;
  long long n = 0, m = 0, d = 0;
  std::optional<std::string> source_label, sink_label;
  std::vector<std::optional<std::pair<std::string, std::string>>> arc_labels;
  struct CostLine {
    int line;
    ArcSet key;
    Rational value;
  };
  std::vector<CostLine> costs;
  absl::flat_hash_set<ArcSet> seen_keys;
  int last_line = 0;

  for (size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const auto& tok = lines[i];
    if (tok.empty()) continue;
    last_line = ln;
    if (!have_header) {
      if (tok.size() != 5 || tok[0] != "p" || tok[1] != "linspp") {
        throw ParseError(ErrorCode::kParseError, ln,
                         "expected header 'p linspp <n> <m> <d>'");
      }
      n = IntOrThrow(tok[2], ln, "vertex count");
      m = IntOrThrow(tok[3], ln, "arc count");
      d = IntOrThrow(tok[4], ln, "order");
      if (n < 2 || m < 1) {
        throw ParseError(ErrorCode::kParseError, ln,
                         "need at least 2 vertices and 1 arc");
      }
      if (d < 1 || d > kMaxOrder) {
        throw ParseError(ErrorCode::kOrderMismatch, ln,
                         "order must lie in [1, " + std::to_string(kMaxOrder) +
                             "]");
      }
      arc_labels.resize(m);
      have_header = true;
      continue;
    }
    const std::string& kind = tok[0];
    if (kind == "s" || kind == "t") {
      if (tok.size() != 2) {
        throw ParseError(ErrorCode::kParseError, ln,
                         "expected '" + kind + " <vertex>'");
      }
      auto& slot = kind == "s" ? source_label : sink_label;
      if (slot) {
        throw ParseError(ErrorCode::kParseError, ln,
                         "repeated '" + kind + "' line");
      }
      slot = tok[1];
    } else if (kind == "a") {
      if (tok.size() != 4) {
        throw ParseError(ErrorCode::kParseError, ln,
                         "expected 'a <arc_id> <tail> <head>'");
      }
      const long long id = IntOrThrow(tok[1], ln, "arc id");
      if (id < 1 || id > m) {
        throw ParseError(ErrorCode::kArcIdOutOfRange, ln,
                         "arc id " + tok[1] + " outside [1, " +
                             std::to_string(m) + "]");
      }
      if (arc_labels[id - 1]) {
        throw ParseError(ErrorCode::kParseError, ln,
                         "arc " + tok[1] + " declared twice");
      }
      arc_labels[id - 1] = std::make_pair(tok[2], tok[3]);
    } else if (kind == "q") {
      if (tok.size() < 3) {
        throw ParseError(ErrorCode::kParseError, ln,
                         "expected 'q <k> <arcs...> <value>'");
      }
      const long long k = IntOrThrow(tok[1], ln, "key size");
      if (k < 0 || k > d) {
        throw ParseError(ErrorCode::kOrderMismatch, ln,
                         "key size " + tok[1] + " outside [0, " +
                             std::to_string(d) + "]");
      }
      if (static_cast<long long>(tok.size()) != k + 3) {
        throw ParseError(ErrorCode::kParseError, ln,
                         "expected " + std::to_string(k) +
                             " arc ids and a value");
      }
      std::vector<ArcId> ids;
      for (long long j = 0; j < k; ++j) {
        const long long id = IntOrThrow(tok[2 + j], ln, "arc id");
        if (id < 1 || id > m) {
          throw ParseError(ErrorCode::kArcIdOutOfRange, ln,
                           "arc id " + tok[2 + j] + " outside [1, " +
                               std::to_string(m) + "]");
        }
        ids.push_back(static_cast<ArcId>(id));
      }
      ArcSet key;
      try {
        key = ArcSet::FromIds(ids);
      } catch (const Error& e) {
        throw ParseError(ErrorCode::kParseError, ln, e.what());
      }
      if (!seen_keys.insert(key).second) {
        throw ParseError(ErrorCode::kDuplicateCostKey, ln,
                         "cost key {" + key.ToString() + "} given twice");
      }
      costs.push_back({ln, key, RationalOrThrow(tok.back(), ln)});
    } else {
      throw ParseError(ErrorCode::kParseError, ln,
                       "unknown record type '" + kind + "'");
    }
  }
  if (!have_header) {
    throw ParseError(ErrorCode::kParseError, last_line + 1, "missing header");
  }
  if (!source_label || !sink_label) {
    throw ParseError(ErrorCode::kParseError, last_line,
                     "missing source or sink declaration");
  }
  for (long long id = 1; id <= m; ++id) {
    if (!arc_labels[id - 1]) {
      throw ParseError(ErrorCode::kParseError, last_line,
                       "arc " + std::to_string(id) + " is not declared");
    }
  }

  // Vertex labels to ids.
  std::vector<const std::string*> order{&*source_label, &*sink_label};
  for (const auto& pair : arc_labels) {
    order.push_back(&pair->first);
    order.push_back(&pair->second);
  }
  bool numeric = true;
  for (const std::string* label : order) {
    const auto value = ToInt(*label);
    if (!value || *value < 0 || *value >= n) {
      numeric = false;
      break;
    }
  }
  std::vector<std::string> labels;
  absl::flat_hash_map<std::string, VertexId> ids;
  if (numeric) {
    for (long long v = 0; v < n; ++v) {
      labels.push_back(std::to_string(v));
      ids.emplace(labels.back(), static_cast<VertexId>(v));
    }
    // Labels like "007" are numeric but not canonical.
    for (const std::string* label : order) {
      ids.emplace(*label, static_cast<VertexId>(*ToInt(*label)));
    }
  } else {
    for (const std::string* label : order) {
      if (ids.contains(*label)) continue;
      if (static_cast<long long>(labels.size()) == n) {
        throw Error(ErrorCode::kDanglingVertexReference,
                    "more than " + std::to_string(n) + " distinct vertices");
      }
      ids.emplace(*label, static_cast<VertexId>(labels.size()));
      labels.push_back(*label);
    }
    while (static_cast<long long>(labels.size()) < n) {
      labels.push_back("_" + std::to_string(labels.size()));
    }
  }

  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (const auto& pair : arc_labels) {
    arcs.push_back({ids.at(pair->first), ids.at(pair->second)});
  }
  Dag full = Dag::Build(static_cast<int>(n), arcs, ids.at(*source_label),
                        ids.at(*sink_label));
  Instance instance{PruneToCovered(full),
                    OrderDCost(static_cast<int>(d), static_cast<int>(m)),
                    std::move(labels),
                    {}};
  for (auto& cost : costs) {
    bool kept = true;
    for (ArcId a : cost.key) kept = kept && instance.dag.has_arc(a);
    if (!kept) {
      instance.warnings.push_back("line " + std::to_string(cost.line) +
                                  ": dropped cost key {" + cost.key.ToString() +
                                  "} on an arc off every source-sink path");
      continue;
    }
    instance.cost.Set(cost.key, std::move(cost.value));
  }
  if (instance.dag.arc_count() < full.arc_count()) {
    instance.warnings.push_back(
        std::to_string(full.arc_count() - instance.dag.arc_count()) +
        " arc(s) lie on no source-sink path and were pruned");
  }
  return instance;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return out.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

Instance ReadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

std::string FormatInstance(const Dag& dag, const OrderDCost& q,
                           const std::vector<std::string>& labels) {
  auto label = [&](VertexId v) {
    return static_cast<size_t>(v) < labels.size() ? labels[v]
                                                  : std::to_string(v);
  };
  std::ostringstream out;
  out << "p linspp " << dag.vertex_count() << ' ' << dag.arc_universe() << ' '
      << q.order() << '\n';
  out << "s " << label(dag.source()) << '\n';
  out << "t " << label(dag.sink()) << '\n';
  for (ArcId a = 1; a <= static_cast<ArcId>(dag.arc_universe()); ++a) {
    out << "a " << a << ' ' << label(dag.arc(a).tail) << ' '
        << label(dag.arc(a).head) << '\n';
  }
  for (const auto& [key, value] : q.SortedEntries()) {
    out << "q " << key.size();
    for (ArcId a : key) out << ' ' << a;
    out << ' ' << value << '\n';
  }
  return out.str();
}

std::string FormatCostFile(const Dag& dag, const LinearCost& c) {
  std::ostringstream out;
  for (ArcId a : dag.arcs()) out << "c " << a << ' ' << c.at(a) << '\n';
  return out.str();
}

LinearCost ParseCostFile(std::string_view text, int arc_universe) {
  LinearCost c(arc_universe);
  const auto lines = Tokenize(text);
  std::vector<char> seen(arc_universe + 1, 0);
  for (size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const auto& tok = lines[i];
    if (tok.empty()) continue;
    if (tok.size() != 3 || tok[0] != "c") {
      throw ParseError(ErrorCode::kParseError, ln,
                       "expected 'c <arc_id> <value>'");
    }
    const long long id = IntOrThrow(tok[1], ln, "arc id");
    if (id < 1 || id > arc_universe) {
      throw ParseError(ErrorCode::kUnknownArc, ln,
                       "arc " + tok[1] + " is not in the graph");
    }
    if (seen[id]) {
      throw ParseError(ErrorCode::kParseError, ln,
                       "arc " + tok[1] + " listed twice");
    }
    seen[id] = 1;
    c.Set(static_cast<ArcId>(id), RationalOrThrow(tok[2], ln));
  }
  return c;
}

std::string FormatBasis(const std::vector<ArcSet>& coordinates,
                        const std::vector<std::vector<Rational>>& basis) {
  std::ostringstream out;
  for (const auto& vec : basis) {
    if (vec.size() != coordinates.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "basis vector length differs from the coordinates");
    }
    bool first = true;
    for (size_t i = 0; i < vec.size(); ++i) {
      if (vec[i].is_zero()) continue;
      if (!first) out << ' ';
      first = false;
      out << coordinates[i].ToString() << '=' << vec[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace linspp
