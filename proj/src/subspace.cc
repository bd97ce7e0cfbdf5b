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

#include "linspp/subspace.h"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "linspp/apec.h"
#include "linspp/error.h"

namespace linspp {
namespace {

void SubsetsUpTo(std::span<const ArcId> arcs, size_t start, int room,
                 ArcSet current, std::vector<ArcSet>& out) {
  out.push_back(current);
  if (room == 0) return;
  for (size_t i = start; i < arcs.size(); ++i) {
    SubsetsUpTo(arcs, i + 1, room - 1, current.With(arcs[i]), out);
  }
}

PipelineResult Linearization(const Dag& dag, const OrderDCost& q,
                             const NonbasicSystem& ns) {
  PipelineResult out{{}, LinearCost(dag.arc_universe())};
  const int d = q.order();
  if (d == 1) {
    for (ArcId a : dag.arcs()) {
      Rational value = q.at(ArcSet{a});
      if (dag.arc(a).tail == dag.source()) value += q.at(ArcSet());
      out.cost.Set(a, std::move(value));
    }
    out.cost = ReduceForm(out.cost, ns, dag);
    return out;
  }
  const GammaTable gamma = ComputeGamma(q, ns, dag);
  for (ArcId a : dag.out_arcs(dag.source())) {
    const VertexId v = dag.arc(a).head;
    out.cost.Set(a, gamma.Value(ArcSet(), v) + gamma.Value(ArcSet{a}, v));
  }
  for (VertexId u : dag.vertices()) {
    if (u == dag.source() || u == dag.sink()) continue;
    std::optional<Dag> prefix;
    for (ArcId a : dag.out_arcs(u)) {
      if (ns.is_nonbasic(a)) continue;
      if (!prefix) prefix = RestrictToPrefix(dag, u);
      const ApecInstance sub =
          CorrespondingApecInstance(a, q, ns, dag, gamma, *prefix);
      ApecResidualResult r = ApecResidual(sub.dag, sub.cost);
      out.residual.insert(out.residual.end(),
                          std::make_move_iterator(r.residual.begin()),
                          std::make_move_iterator(r.residual.end()));
      out.cost.Set(a, std::move(r.beta));
    }
  }
  return out;
}

}  // namespace

CoordinateIndex::CoordinateIndex(const Dag& dag, int order)
    : order_(order), arc_universe_(dag.arc_universe()) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorCode::kOrderMismatch, "order out of range");
  }
  SubsetsUpTo(dag.arcs(), 0, order, ArcSet(), sets_);
  std::sort(sets_.begin(), sets_.end());
  position_.reserve(sets_.size());
  for (size_t i = 0; i < sets_.size(); ++i) {
    position_.emplace(sets_[i], static_cast<int>(i));
  }
}

int CoordinateIndex::find(const ArcSet& s) const {
  const auto it = position_.find(s);
  return it == position_.end() ? -1 : it->second;
}

std::vector<Rational> CoordinateIndex::ToVector(const OrderDCost& q) const {
  if (q.order() != order_) {
    throw Error(ErrorCode::kDimensionMismatch, "order differs from the index");
  }
  std::vector<Rational> x(sets_.size());
  for (const auto& [key, value] : q.entries()) {
    const int i = find(key);
    if (i < 0) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "cost key {" + key.ToString() + "} is not a coordinate");
    }
    x[i] = value;
  }
  return x;
}

OrderDCost CoordinateIndex::ToCost(const std::vector<Rational>& x) const {
  if (x.size() != sets_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector has " + std::to_string(x.size()) + " entries, expected " +
                    std::to_string(sets_.size()));
  }
  OrderDCost q(order_, arc_universe_);
  for (size_t i = 0; i < x.size(); ++i) q.Set(sets_[i], x[i]);
  return q;
}

PipelineResult LinearizationResidual(const Dag& dag, const OrderDCost& q) {
  return Linearization(dag, q, ChooseNonbasicSystem(dag));
}

ApecResidualResult ApecResidual(const Dag& dag, const OrderDCost& q) {
  ApecResidualResult out;
  if (q.order() == 1) {
    const Apec1Potentials pot = ComputeApec1Potentials(dag, q);
    for (ArcId a : dag.arcs()) {
      const Arc& arc = dag.arc(a);
      out.residual.push_back(pot.y[arc.head] - pot.y[arc.tail] -
                             q.at(ArcSet{a}));
    }
    out.beta = pot.y[dag.sink()] + q.at(ArcSet());
    return out;
  }
  const NonbasicSystem ns = ChooseNonbasicSystem(dag);
  PipelineResult lin = Linearization(dag, q, ns);
  out.residual = std::move(lin.residual);
  for (ArcId a : dag.arcs()) {
    if (dag.arc(a).tail == dag.source() || ns.is_nonbasic(a)) continue;
    out.residual.push_back(lin.cost.at(a));
  }
  const auto source_arcs = dag.out_arcs(dag.source());
  const Rational& first = lin.cost.at(source_arcs.front());
  for (size_t i = 1; i < source_arcs.size(); ++i) {
    out.residual.push_back(lin.cost.at(source_arcs[i]) - first);
  }
  out.beta = first;
  return out;
}

Matrix AssembleMatrix(const Dag& dag, const CoordinateIndex& index,
                      const AssembleOptions& options) {
  const size_t cols = index.size();
  std::vector<std::vector<Rational>> columns(cols);
  auto build = [&](size_t i) {
    OrderDCost unit(index.order(), index.arc_universe());
    unit.Set(index.set(i), Rational(1));
    columns[i] = LinearizationResidual(dag, unit).residual;
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(cols)));
  if (jobs == 1) {
    for (size_t i = 0; i < cols; ++i) build(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < cols;) build(i);
      });
    }
    for (auto& t : threads) t.join();
  }

  // The residual layout only depends on the graph, so all columns agree.
  const size_t rows = cols == 0 ? 0 : columns[0].size();
  std::vector<char> keep(rows, 1);
  if (options.compress_rows) {
    for (size_t r = 0; r < rows; ++r) {
      keep[r] = std::any_of(columns.begin(), columns.end(),
                            [&](const auto& col) { return !col[r].is_zero(); });
    }
  }
  Matrix m;
  m.rows = static_cast<size_t>(std::count(keep.begin(), keep.end(), 1));
  m.cols = cols;
  m.data.resize(m.rows * m.cols);
  for (size_t c = 0; c < cols; ++c) {
    size_t out_row = 0;
    for (size_t r = 0; r < rows; ++r) {
      if (!keep[r]) continue;
      m.at(out_row++, c) = std::move(columns[c][r]);
    }
  }
  return m;
}

std::vector<Rational> Multiply(const Matrix& m, const std::vector<Rational>& x) {
  if (x.size() != m.cols) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length differs from columns");
  }
  std::vector<Rational> y(m.rows);
  for (size_t r = 0; r < m.rows; ++r) {
    for (size_t c = 0; c < m.cols; ++c) {
      if (!m.at(r, c).is_zero() && !x[c].is_zero()) y[r] += m.at(r, c) * x[c];
    }
  }
  return y;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row.
std::vector<size_t> Reduce(Matrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t found = row;
    while (found < m.rows && m.at(found, col).is_zero()) ++found;
    if (found == m.rows) continue;
    if (found != row) {
      for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(found, c), m.at(row, c));
    }
    const Rational inv = Rational(1) / m.at(row, col);
    for (size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Rational factor = m.at(r, col);
      for (size_t c = col; c < m.cols; ++c) {
        if (!m.at(row, c).is_zero()) m.at(r, c) -= factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t Rank(const Matrix& m) {
  Matrix copy = m;
  return Reduce(copy).size();
}

std::vector<std::vector<Rational>> KernelBasis(const Matrix& m) {
  Matrix r = m;
  const std::vector<size_t> pivots = Reduce(r);
  std::vector<char> is_pivot(m.cols, 0);
  for (size_t p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols);
    v[f] = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> ProjectOntoSubspace(
    const std::vector<Rational>& x,
    const std::vector<std::vector<Rational>>& basis) {
  const size_t k = basis.size();
  for (const auto& b : basis) {
    if (b.size() != x.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "basis vector length differs from the input");
    }
  }
  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
  };
  // Gram system G lambda = B^T x, solved on the augmented matrix.
  Matrix g;
  g.rows = k;
  g.cols = k + 1;
  g.data.resize(k * (k + 1));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      g.at(i, j) = dot(basis[i], basis[j]);
      g.at(j, i) = g.at(i, j);
    }
    g.at(i, k) = dot(basis[i], x);
  }
  const std::vector<size_t> pivots = Reduce(g);
  std::vector<Rational> lambda(k);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < k) lambda[pivots[i]] = g.at(i, k);
  }
  std::vector<Rational> out(x.size());
  for (size_t i = 0; i < k; ++i) {
    if (lambda[i].is_zero()) continue;
    for (size_t j = 0; j < x.size(); ++j) {
      if (!basis[i][j].is_zero()) out[j] += lambda[i] * basis[i][j];
    }
  }
  return out;
}

}  // namespace linspp
