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

#include "wl1nmf/matrix.h"

#include <algorithm>
#include <string>
#include <utility>

namespace wl1nmf {

DenseMatrix::DenseMatrix(Index rows, Index cols, double fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw InvalidArgument("DenseMatrix: negative dimension");
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

DenseMatrix::DenseMatrix(Index rows, Index cols,
                         std::vector<double> column_major)
    : rows_(rows), cols_(cols), data_(std::move(column_major)) {
  if (rows < 0 || cols < 0 ||
      data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InvalidArgument("DenseMatrix: data length does not match " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
}

DenseMatrix DenseMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m == 0 ? 0 : static_cast<Index>(rows.front().size());
  DenseMatrix out(m, n);
  for (Index i = 0; i < m; ++i) {
    if (static_cast<Index>(rows[i].size()) != n) {
      throw InvalidArgument("DenseMatrix::FromRows: ragged rows");
    }
    for (Index j = 0; j < n; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (Index j = 0; j < cols_; ++j) {
    for (Index i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
  }
  return t;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("multiply: inner dimensions disagree");
  }
  DenseMatrix c(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) {
    auto cj = c.col(j);
    for (Index t = 0; t < a.cols(); ++t) {
      const double btj = b(t, j);
      if (btj == 0.0) continue;
      auto at = a.col(t);
      for (Index i = 0; i < a.rows(); ++i) cj[i] += at[i] * btj;
    }
  }
  return c;
}

bool is_nonnegative(const DenseMatrix& a) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [](double v) { return v >= 0.0; });
}

SparseNonnegMatrix::SparseNonnegMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), col_starts_(static_cast<std::size_t>(cols) + 1, 0) {
  if (rows < 0 || cols < 0) {
    throw InvalidArgument("SparseNonnegMatrix: negative dimension");
  }
}

SparseNonnegMatrix::SparseNonnegMatrix(Index rows, Index cols,
                                       std::vector<Offset> col_starts,
                                       std::vector<Index> row_indices,
                                       std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      col_starts_(std::move(col_starts)),
      row_indices_(std::move(row_indices)),
      values_(std::move(values)) {
  if (rows < 0 || cols < 0) {
    throw InvalidArgument("SparseNonnegMatrix: negative dimension");
  }
  if (col_starts_.size() != static_cast<std::size_t>(cols) + 1 ||
      col_starts_.front() != 0 ||
      col_starts_.back() != static_cast<Offset>(values_.size()) ||
      row_indices_.size() != values_.size()) {
    throw DataError("SparseNonnegMatrix: inconsistent column starts");
  }
  for (Index j = 0; j < cols; ++j) {
    if (col_starts_[j] > col_starts_[j + 1]) {
      throw DataError("SparseNonnegMatrix: column starts decrease at column " +
                      std::to_string(j + 1));
    }
    for (Offset k = col_starts_[j]; k < col_starts_[j + 1]; ++k) {
      const Index r = row_indices_[k];
      if (r < 0 || r >= rows) {
        throw DataError("SparseNonnegMatrix: row index out of range in column " +
                        std::to_string(j + 1));
      }
      if (k > col_starts_[j] && row_indices_[k - 1] >= r) {
        throw DataError(
            "SparseNonnegMatrix: row indices not strictly increasing in "
            "column " + std::to_string(j + 1));
      }
      if (!(values_[k] > 0.0)) {
        throw DataError("SparseNonnegMatrix: non-positive stored value at (" +
                        std::to_string(r + 1) + ", " + std::to_string(j + 1) +
                        ")");
      }
    }
  }
}

SparseNonnegMatrix SparseNonnegMatrix::FromTriplets(
    Index rows, Index cols, std::vector<Triplet> triplets) {
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw DataError("FromTriplets: coordinate (" + std::to_string(t.row + 1) +
                      ", " + std::to_string(t.col + 1) + ") out of range");
    }
    if (!(t.value >= 0.0)) {
      throw DataError("FromTriplets: negative value at (" +
                      std::to_string(t.row + 1) + ", " +
                      std::to_string(t.col + 1) + ")");
    }
  }
  // Stable so that duplicates are summed in input order.
  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.col != b.col ? a.col < b.col : a.row < b.row;
                   });
  std::vector<Offset> starts(static_cast<std::size_t>(cols) + 1, 0);
  std::vector<Index> idx;
  std::vector<double> val;
  idx.reserve(triplets.size());
  val.reserve(triplets.size());
  std::size_t k = 0;
  for (Index j = 0; j < cols; ++j) {
    starts[j] = static_cast<Offset>(val.size());
    while (k < triplets.size() && triplets[k].col == j) {
      const Index r = triplets[k].row;
      double sum = 0.0;
      while (k < triplets.size() && triplets[k].col == j &&
             triplets[k].row == r) {
        sum += triplets[k].value;
        ++k;
      }
      if (sum > 0.0) {
        idx.push_back(r);
        val.push_back(sum);
      }
    }
  }
  starts[cols] = static_cast<Offset>(val.size());
  return SparseNonnegMatrix(rows, cols, std::move(starts), std::move(idx),
                            std::move(val));
}

double SparseNonnegMatrix::l1_norm() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

SparseNonnegMatrix from_dense(const DenseMatrix& a, double zero_tol) {
  if (!(zero_tol >= 0.0)) {
    throw InvalidArgument("from_dense: zero_tol must be >= 0");
  }
  std::vector<Offset> starts(static_cast<std::size_t>(a.cols()) + 1, 0);
  std::vector<Index> idx;
  std::vector<double> val;
  for (Index j = 0; j < a.cols(); ++j) {
    starts[j] = static_cast<Offset>(val.size());
    for (Index i = 0; i < a.rows(); ++i) {
      const double v = a(i, j);
      if (!(v >= 0.0)) {
        throw DataError("from_dense: negative entry " + std::to_string(v) +
                        " at (" + std::to_string(i + 1) + ", " +
                        std::to_string(j + 1) + ")");
      }
      if (v > zero_tol) {
        idx.push_back(i);
        val.push_back(v);
      }
    }
  }
  starts[a.cols()] = static_cast<Offset>(val.size());
  return SparseNonnegMatrix(a.rows(), a.cols(), std::move(starts),
                            std::move(idx), std::move(val));
}

DenseMatrix to_dense(const SparseNonnegMatrix& x) {
  DenseMatrix d(x.rows(), x.cols());
  for (Index j = 0; j < x.cols(); ++j) {
    auto rows = x.col_rows(j);
    auto vals = x.col_values(j);
    for (std::size_t k = 0; k < rows.size(); ++k) d(rows[k], j) = vals[k];
  }
  return d;
}

SparseNonnegMatrix transpose(const SparseNonnegMatrix& x) {
  const Index m = x.rows();
  const Index n = x.cols();
  std::vector<Offset> starts(static_cast<std::size_t>(m) + 1, 0);
  for (Index r : x.row_indices()) ++starts[r + 1];
  for (Index i = 0; i < m; ++i) starts[i + 1] += starts[i];
  std::vector<Offset> next(starts.begin(), starts.end() - 1);
  std::vector<Index> idx(x.nnz());
  std::vector<double> val(x.nnz());
  // Visiting columns in order keeps the new row indices sorted.
  for (Index j = 0; j < n; ++j) {
    auto rows = x.col_rows(j);
    auto vals = x.col_values(j);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Offset dst = next[rows[k]]++;
      idx[dst] = j;
      val[dst] = vals[k];
    }
  }
  return SparseNonnegMatrix(n, m, std::move(starts), std::move(idx),
                            std::move(val));
}

double factor_sparsity(const DenseMatrix& f) {
  if (f.empty()) return 0.0;
  const auto zeros = std::count(f.data().begin(), f.data().end(), 0.0);
  return static_cast<double>(zeros) / static_cast<double>(f.size());
}

void validate_factors(const FactorPair& f) {
  if (f.w.cols() != f.h.rows()) {
    throw InvalidArgument("factor inner dimensions disagree: W has " +
                          std::to_string(f.w.cols()) + " columns, H has " +
                          std::to_string(f.h.rows()) + " rows");
  }
  if (!is_nonnegative(f.w) || !is_nonnegative(f.h)) {
    throw InvalidArgument("factors must be nonnegative");
  }
}

}  // namespace wl1nmf
