// Copyright 2026 The wl1nmf Authors.
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

// Sparse coordinate descent (sCD) for weighted-L1 NMF:
//
//   min_{W,H >= 0}  sum_{X_ij > 0} |X - WH|_ij + lambda sum_{X_ij = 0} (WH)_ij.
//
// Work per sweep is proportional to r * nnz(X) * log(nnz(X)): each column
// subproblem only touches the positive entries of that column, and the
// zero entries enter through a single grouped weight.

#ifndef WL1NMF_SCD_H_
#define WL1NMF_SCD_H_

#include <span>
#include <vector>

#include "wl1nmf/matrix.h"
#include "wl1nmf/problem.h"
#include "wl1nmf/weighted_median.h"

namespace wl1nmf {

// Per-column state of update_h: the rows of W on the support of X(:,j),
// the fitted values v = (WH)(support, j), and scratch for the scalar
// subproblems. One instance per worker thread.
class ColumnWorkspace {
 public:
  // Gathers W on the support of column j and computes v from h_col.
  void load(const SparseNonnegMatrix& x, const DenseMatrix& w, Index j,
            std::span<const double> h_col);

  // Updates h_col coordinate by coordinate (ascending) and keeps v in sync.
  // col_sums[i] is the i-th column sum of W. Returns the column's share of
  // the objective, sum |X(:,j) - v| - lambda * sum v, over the support.
  double update(std::span<double> h_col, std::span<const double> col_sums,
                double lambda);

  // Current v; valid after load().
  std::span<const double> fitted() const { return fit_; }

 private:
  std::span<const double> data_;
  std::size_t q_ = 0;
  std::vector<double> block_;  // r segments of length q, segment i = W(S, i)
  std::vector<double> fit_;
  std::vector<double> num_;
  std::vector<double> ratio_;
  WeightedMedianWorkspace median_;
};

// One pass over the columns of H with W fixed. Returns the objective at the
// updated H. Columns are independent and may be split over `threads`
// workers; the result is bit-identical for every thread count.
double update_h(const SparseNonnegMatrix& x, const DenseMatrix& w,
                DenseMatrix& h, double lambda, int threads = 1);

// The weighted L1 objective in O(nnz * r), using ||WH||_1 = (e'W)(He).
double objective(const SparseNonnegMatrix& x, const DenseMatrix& w,
                 const DenseMatrix& h, double lambda);

// Sufficient condition for a zero update of one coordinate:
//   sum_{x_s < 0} w_s + c / 2 > (1/2) sum_s w_s.
// x are the subproblem numerators and w the basis entries on the support.
bool zero_update_predicate(std::span<const double> x,
                           std::span<const double> w_col, double c);

// Alternates update_h on (X', H', W') and (X, W, H) until the relative
// objective changes by less than the tolerance between sweeps, or the sweep
// or time budget runs out.
SolveResult scd(const WL1Problem& problem);

}  // namespace wl1nmf

#endif  // WL1NMF_SCD_H_
