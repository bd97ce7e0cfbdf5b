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

#include <algorithm>
#include <map>
#include <string>

#include <gmpxx.h>

#include "linspp/error.h"

namespace linspp {
namespace {

using u128 = unsigned __int128;

u128 Saturate(u128 x, std::uint64_t cap) { return x > cap ? cap : x; }

// Path counts from the source to v and from v to the sink, saturating.
void PathCounts(const Dag& dag, std::uint64_t cap, std::vector<u128>& from_s,
                std::vector<u128>& to_t) {
  from_s.assign(dag.vertex_count(), 0);
  to_t.assign(dag.vertex_count(), 0);
  from_s[dag.source()] = 1;
  for (VertexId v : dag.vertices()) {
    for (ArcId a : dag.out_arcs(v)) {
      auto& h = from_s[dag.arc(a).head];
      h = Saturate(h + from_s[v], cap);
    }
  }
  to_t[dag.sink()] = 1;
  const auto order = dag.vertices();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (ArcId a : dag.in_arcs(*it)) {
      auto& tl = to_t[dag.arc(a).tail];
      tl = Saturate(tl + to_t[*it], cap);
    }
  }
}

// First arc of `path` that is not in `other`, or kNoArc.
ArcId Representative(const Path& path, const Path& other) {
  for (ArcId a : path.arcs) {
    if (std::find(other.arcs.begin(), other.arcs.end(), a) == other.arcs.end()) {
      return a;
    }
  }
  return kNoArc;
}

// One equation of the path system with integer coefficients, plus the
// combination of original rows it represents.
struct Row {
  std::vector<mpz_class> coef;  // unknowns, then right-hand side
  std::map<int, mpq_class> combo;
};

void RemoveContent(Row& row) {
  mpz_class g = 0;
  for (const auto& x : row.coef) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : row.coef) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (auto& [i, y] : row.combo) y /= g;
}

}  // namespace

bool TwoPathLinearizable(const Dag& dag, const TwoPathSystem& tps,
                         const OrderDCost& q) {
  auto f = [&](const Path& p, const Path& r) {
    return EvalOrderD(q, Concat(dag, p, r).arcs);
  };
  return f(tps.p1, tps.q1) + f(tps.p2, tps.q2) ==
         f(tps.p1, tps.q2) + f(tps.p2, tps.q1);
}

std::uint64_t CountTwoPathSystems(const Dag& dag, std::uint64_t cap) {
  std::vector<u128> from_s, to_t;
  PathCounts(dag, cap, from_s, to_t);
  u128 total = 0;
  for (VertexId v : dag.vertices()) {
    const u128 a = from_s[v] * (from_s[v] + 1) / 2;
    const u128 b = to_t[v] * (to_t[v] + 1) / 2;
    total = Saturate(total + Saturate(Saturate(a, cap) * Saturate(b, cap), cap),
                     cap);
  }
  return static_cast<std::uint64_t>(total);
}

void ForEachTwoPathSystem(
    const Dag& dag, std::uint64_t limit,
    const std::function<bool(const TwoPathSystem&)>& visit) {
  const std::uint64_t cap = limit == UINT64_MAX ? limit : limit + 1;
  if (CountTwoPathSystems(dag, cap) > limit) {
    throw Error(ErrorCode::kTooManySystems,
                "more than " + std::to_string(limit) + " two-path systems");
  }
  for (VertexId v : dag.vertices()) {
    const auto heads = EnumeratePaths(dag, dag.source(), v, UINT64_MAX);
    const auto tails = EnumeratePaths(dag, v, dag.sink(), UINT64_MAX);
    for (size_t i = 0; i < heads.size(); ++i) {
      for (size_t j = i; j < heads.size(); ++j) {
        for (size_t k = 0; k < tails.size(); ++k) {
          for (size_t l = k; l < tails.size(); ++l) {
            if (!visit(TwoPathSystem{v, heads[i], heads[j], tails[k],
                                     tails[l]})) {
              return;
            }
          }
        }
      }
    }
  }
}

std::vector<TwoPathSystem> EnumerateTwoPathSystems(const Dag& dag,
                                                   std::uint64_t limit) {
  std::vector<TwoPathSystem> out;
  ForEachTwoPathSystem(dag, limit, [&](const TwoPathSystem& tps) {
    out.push_back(tps);
    return true;
  });
  return out;
}

bool OracleLinearizeTps(const Dag& dag, const OrderDCost& q,
                        std::uint64_t limit) {
  bool ok = true;
  ForEachTwoPathSystem(dag, limit, [&](const TwoPathSystem& tps) {
    ok = TwoPathLinearizable(dag, tps, q);
    return ok;
  });
  return ok;
}

LpVerdict OracleLinearizeLp(const Dag& dag, const OrderDCost& q,
                            std::uint64_t limit) {
  LpVerdict verdict;
  verdict.paths = EnumeratePaths(dag, limit);
  const auto arcs = dag.arcs();
  std::vector<int> column(dag.arc_universe() + 1, -1);
  for (size_t i = 0; i < arcs.size(); ++i) column[arcs[i]] = static_cast<int>(i);
  const size_t n = arcs.size();

  std::vector<Row> pivots;
  std::vector<size_t> pivot_col;
  for (size_t p = 0; p < verdict.paths.size(); ++p) {
    const mpq_class rhs = EvalOrderD(q, verdict.paths[p].arcs).ToMpq();
    const mpz_class den = rhs.get_den();
    Row row;
    row.coef.assign(n + 1, 0);
    for (ArcId a : verdict.paths[p].arcs) row.coef[column[a]] = den;
    row.coef[n] = rhs.get_num();
    row.combo[static_cast<int>(p)] = mpq_class(den);

    for (size_t k = 0; k < pivots.size(); ++k) {
      const size_t j = pivot_col[k];
      if (row.coef[j] == 0) continue;
      const mpz_class mine = row.coef[j];
      const mpz_class theirs = pivots[k].coef[j];
      for (size_t c = 0; c <= n; ++c) {
        row.coef[c] = theirs * row.coef[c] - mine * pivots[k].coef[c];
      }
      for (auto& [i, y] : row.combo) y *= theirs;
      for (const auto& [i, y] : pivots[k].combo) row.combo[i] -= mine * y;
      RemoveContent(row);
    }
    size_t lead = n;
    for (size_t c = 0; c < n; ++c) {
      if (row.coef[c] != 0) {
        lead = c;
        break;
      }
    }
    if (lead == n) {
      if (row.coef[n] == 0) continue;
      std::vector<Rational> cert(verdict.paths.size());
      for (const auto& [i, y] : row.combo) {
        if (y != 0) cert[i] = Rational(y);
      }
      verdict.certificate = std::move(cert);
      return verdict;
    }
    pivots.push_back(std::move(row));
    pivot_col.push_back(lead);
  }

  // Each pivot row vanishes on the pivot columns of earlier rows, so solving
  // in reverse insertion order only uses known values. Free unknowns are 0.
  std::vector<mpq_class> x(n, 0);
  for (size_t k = pivots.size(); k-- > 0;) {
    const Row& row = pivots[k];
    mpq_class acc(row.coef[n]);
    for (size_t c = 0; c < n; ++c) {
      if (c != pivot_col[k] && row.coef[c] != 0) acc -= row.coef[c] * x[c];
    }
    x[pivot_col[k]] = acc / mpq_class(row.coef[pivot_col[k]]);
    x[pivot_col[k]].canonicalize();
  }
  LinearCost c(dag.arc_universe());
  for (size_t i = 0; i < n; ++i) c.Set(arcs[i], Rational(x[i]));
  verdict.linearizable = true;
  verdict.cost = ReduceForm(c, ChooseNonbasicSystem(dag), dag);
  return verdict;
}

LinearCost TwoPathLinearizingCost(const Dag& dag, const TwoPathSystem& tps,
                                  const OrderDCost& q) {
  if (!TwoPathLinearizable(dag, tps, q)) {
    throw Error(ErrorCode::kNotLinearizable,
                "two-path system violates the balance equation");
  }
  auto f = [&](const Path& p, const Path& r) {
    return EvalOrderD(q, Concat(dag, p, r).arcs);
  };
  LinearCost c(dag.arc_universe());
  const bool same_p = tps.p1 == tps.p2;
  const bool same_q = tps.q1 == tps.q2;
  if (same_p && same_q) {
    const Path whole = Concat(dag, tps.p1, tps.q1);
    c.Set(whole.arcs.front(), f(tps.p1, tps.q1));
  } else if (same_p) {
    c.Set(Representative(tps.q1, tps.q2), f(tps.p1, tps.q1));
    c.Set(Representative(tps.q2, tps.q1), f(tps.p1, tps.q2));
  } else if (same_q) {
    c.Set(Representative(tps.p1, tps.p2), f(tps.p1, tps.q1));
    c.Set(Representative(tps.p2, tps.p1), f(tps.p2, tps.q1));
  } else {
    const Rational f11 = f(tps.p1, tps.q1);
    const Rational f12 = f(tps.p1, tps.q2);
    c.Set(Representative(tps.p1, tps.p2), f12);
    c.Set(Representative(tps.p2, tps.p1), f(tps.p2, tps.q2));
    c.Set(Representative(tps.q1, tps.q2), f11 - f12);
  }
  return c;
}

}  // namespace linspp
