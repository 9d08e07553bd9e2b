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

#ifndef WL1NMF_MATRIX_H_
#define WL1NMF_MATRIX_H_

#include <span>
#include <vector>

#include "wl1nmf/common.h"

namespace wl1nmf {

// Dense real matrix in column-major order.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Index rows, Index cols, double fill = 0.0);
  DenseMatrix(Index rows, Index cols, std::vector<double> column_major);

  // Builds from nested rows, e.g. {{1, 0}, {0, 1}}. Convenient in tests.
  static DenseMatrix FromRows(const std::vector<std::vector<double>>& rows);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(Index i, Index j) {
    return data_[static_cast<std::size_t>(j) * rows_ + i];
  }
  double operator()(Index i, Index j) const {
    return data_[static_cast<std::size_t>(j) * rows_ + i];
  }

  std::span<double> col(Index j) {
    return {data_.data() + static_cast<std::size_t>(j) * rows_,
            static_cast<std::size_t>(rows_)};
  }
  std::span<const double> col(Index j) const {
    return {data_.data() + static_cast<std::size_t>(j) * rows_,
            static_cast<std::size_t>(rows_)};
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  DenseMatrix transposed() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

// True iff every entry is >= 0 (NaN counts as negative).
bool is_nonnegative(const DenseMatrix& a);

// Compressed-column nonnegative sparse matrix. Only strictly positive values
// are stored; row indices are strictly increasing within each column.
class SparseNonnegMatrix {
 public:
  SparseNonnegMatrix() = default;
  SparseNonnegMatrix(Index rows, Index cols);  // all zero

  // Validates every structural invariant; throws DataError on violation.
  SparseNonnegMatrix(Index rows, Index cols, std::vector<Offset> col_starts,
                     std::vector<Index> row_indices,
                     std::vector<double> values);

  struct Triplet {
    Index row;
    Index col;
    double value;
  };
  // Duplicates are summed; resulting zeros are dropped. Negative values and
  // out-of-range coordinates throw DataError.
  static SparseNonnegMatrix FromTriplets(Index rows, Index cols,
                                         std::vector<Triplet> triplets);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Offset nnz() const { return static_cast<Offset>(values_.size()); }

  std::span<const Offset> col_starts() const { return col_starts_; }
  std::span<const Index> row_indices() const { return row_indices_; }
  std::span<const double> values() const { return values_; }

  Offset col_nnz(Index j) const { return col_starts_[j + 1] - col_starts_[j]; }
  std::span<const Index> col_rows(Index j) const {
    return std::span<const Index>(row_indices_).subspan(
        col_starts_[j], col_nnz(j));
  }
  std::span<const double> col_values(Index j) const {
    return std::span<const double>(values_).subspan(col_starts_[j],
                                                    col_nnz(j));
  }

  // Sum of stored values, i.e. ||X||_1.
  double l1_norm() const;

  friend bool operator==(const SparseNonnegMatrix&,
                         const SparseNonnegMatrix&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Offset> col_starts_{0};
  std::vector<Index> row_indices_;
  std::vector<double> values_;
};

// Entries <= zero_tol are dropped. A negative entry throws DataError naming
// its (1-based) coordinates.
SparseNonnegMatrix from_dense(const DenseMatrix& a, double zero_tol = 0.0);

DenseMatrix to_dense(const SparseNonnegMatrix& x);

SparseNonnegMatrix transpose(const SparseNonnegMatrix& x);

// Fraction of entries exactly equal to zero; 0 for an empty matrix.
double factor_sparsity(const DenseMatrix& f);

// Nonnegative factors W (m x r) and H (r x n).
struct FactorPair {
  DenseMatrix w;
  DenseMatrix h;

  Index rank() const { return w.cols(); }
  DenseMatrix product() const { return multiply(w, h); }
};

// Throws InvalidArgument unless inner dimensions agree and all entries are
// nonnegative.
void validate_factors(const FactorPair& f);

}  // namespace wl1nmf

#endif  // WL1NMF_MATRIX_H_
