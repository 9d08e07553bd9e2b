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

// File formats. Reals are written with 17 significant digits so that a
// write/read round trip is exact. Parse errors throw DataError with
// "<source>:<line>: " prefixed; LF and CRLF line endings are accepted.
//
// MatrixMarket: coordinate format only, field real, integer or pattern
// (values 1), symmetry general only. Duplicates are summed.
//
// Dense CSV: one row per line, comma separated, optionally preceded by a
// "# m n" line.

#ifndef WL1NMF_IO_H_
#define WL1NMF_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "wl1nmf/matrix.h"
#include "wl1nmf/problem.h"

namespace wl1nmf {

SparseNonnegMatrix read_matrix_market(const std::string& path);
SparseNonnegMatrix parse_matrix_market(std::istream& in,
                                       const std::string& source);

// Each comment line is emitted as "% <text>" after the banner.
void write_matrix_market(const SparseNonnegMatrix& x, const std::string& path,
                         const std::vector<std::string>& comments = {});
void format_matrix_market(const SparseNonnegMatrix& x, std::ostream& out,
                          const std::vector<std::string>& comments = {});

DenseMatrix read_dense_csv(const std::string& path);
DenseMatrix parse_dense_csv(std::istream& in, const std::string& source);

void write_dense_csv(const DenseMatrix& a, const std::string& path,
                     bool header = true);
void format_dense_csv(const DenseMatrix& a, std::ostream& out,
                      bool header = true);

// Columns: sweep,objective,seconds,w_sparsity,h_sparsity.
void write_trace_csv(const SolveTrace& trace, const std::string& path);
void format_trace_csv(const SolveTrace& trace, std::ostream& out);

// Shortest form is not attempted; always 17 significant digits.
std::string format_real(double v);

}  // namespace wl1nmf

#endif  // WL1NMF_IO_H_
