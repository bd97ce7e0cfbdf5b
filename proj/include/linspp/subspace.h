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

// The linearizable order-d instances on a fixed graph form a linear subspace.
// It is computed as the kernel of a matrix whose columns are the residuals of
// the linearization pipeline applied to unit instances.

#ifndef LINSPP_SUBSPACE_H_
#define LINSPP_SUBSPACE_H_

#include <vector>

#include "absl/container/flat_hash_map.h"
#include "linspp/arc_set.h"
#include "linspp/costs.h"
#include "linspp/graph.h"
#include "linspp/rational.h"

namespace linspp {

// Coordinates of an order-d cost on a graph: all subsets of active arcs with
// at most d elements, ascending (empty set first).
class CoordinateIndex {
 public:
  CoordinateIndex(const Dag& dag, int order);

  int order() const { return order_; }
  int arc_universe() const { return arc_universe_; }
  size_t size() const { return sets_.size(); }
  const ArcSet& set(size_t i) const { return sets_[i]; }
  // Position of `s`, or -1.
  int find(const ArcSet& s) const;

  // Dense vector of q on these coordinates. Keys outside the index must be 0.
  std::vector<Rational> ToVector(const OrderDCost& q) const;
  OrderDCost ToCost(const std::vector<Rational>& x) const;

 private:
  int order_;
  int arc_universe_;
  std::vector<ArcSet> sets_;
  absl::flat_hash_map<ArcSet, int> position_;
};

// Residual of the linearization pipeline: a vector, linear in q, that
// vanishes exactly when q is linearizable. `cost` is the pipeline's linear
// cost, which is the reduced-form linearization whenever the residual is 0.
struct PipelineResult {
  std::vector<Rational> residual;
  LinearCost cost;
};
PipelineResult LinearizationResidual(const Dag& dag, const OrderDCost& q);

// Same for the all-paths-equal question; `beta` is the common cost whenever
// the residual is 0.
struct ApecResidualResult {
  std::vector<Rational> residual;
  Rational beta;
};
ApecResidualResult ApecResidual(const Dag& dag, const OrderDCost& q);

// Dense rational matrix, row-major.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Rational> data;

  Rational& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Rational& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

struct AssembleOptions {
  // Drop rows that are zero in every column.
  bool compress_rows = false;
  int jobs = 1;
};

// Column i is the residual of the unit instance on coordinate i. For d = 1
// the matrix has no rows.
Matrix AssembleMatrix(const Dag& dag, const CoordinateIndex& index,
                      const AssembleOptions& options = {});

std::vector<Rational> Multiply(const Matrix& m, const std::vector<Rational>& x);

// Kernel of `m` by Gauss-Jordan elimination: one vector per free column,
// with a 1 in that column, in column order.
std::vector<std::vector<Rational>> KernelBasis(const Matrix& m);
size_t Rank(const Matrix& m);

// Orthogonal projection onto span(basis) under the standard inner product.
// Throws Error(kDimensionMismatch).
std::vector<Rational> ProjectOntoSubspace(
    const std::vector<Rational>& x,
    const std::vector<std::vector<Rational>>& basis);

}  // namespace linspp

#endif  // LINSPP_SUBSPACE_H_
