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

// Encoding of rank-one L1 approximation of a sign matrix M in {+1,-1}^{s x t}
// as rank-one L1-NMF of a binary 2s x 2t matrix. Entry M(i,j) becomes the
// 2x2 block [1 0; 0 1] when +1 and [0 1; 1 0] when -1. For sign vectors
// (u, v) and their embedding (w, h),
//
//   ||X - w h'||_1 = s t + ||M - u v'||_1,
//
// and for any nonnegative (w, h) the left side is at least s t plus the
// error of the differenced pair u_i = w_{2i-1} - w_{2i}, v_j likewise.

#ifndef WL1NMF_REDUCTION_H_
#define WL1NMF_REDUCTION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "wl1nmf/matrix.h"

namespace wl1nmf {

struct ReducedInstance {
  DenseMatrix x;           // binary, 2s x 2t
  std::int64_t budget = 0;  // s t + D
};

// Throws InvalidArgument unless every entry of m is +1 or -1.
void validate_sign_matrix(const DenseMatrix& m);

ReducedInstance encode(const DenseMatrix& m, std::int64_t d);

// u, v in {+1,-1}. Throws InvalidArgument on any other entry.
std::pair<std::vector<double>, std::vector<double>> embed_solution(
    const std::vector<double>& u, const std::vector<double>& v);

// u_i = w_{2i-1} - w_{2i}, v_j = h_{2j-1} - h_{2j}. Lengths must be even.
std::pair<std::vector<double>, std::vector<double>> extract_solution(
    const std::vector<double>& w, const std::vector<double>& h);

// ||A - a b'||_1 for a dense A.
double rank1_l1_error(const DenseMatrix& a, const std::vector<double>& left,
                      const std::vector<double>& right);

struct BinaryRank1 {
  std::vector<double> w;
  std::vector<double> h;
  double error = 0.0;
};

// Best rank-one factorization with w, h in {0,1}. Enumerates all binary
// vectors on the shorter side in increasing bitmask order (bit k = entry k)
// and sets each entry of the other factor to 1 only if that strictly lowers
// the error. The first minimum is returned. Requires min(m, n) <= 20 and a
// binary X.
BinaryRank1 best_binary_rank1(const DenseMatrix& x);

}  // namespace wl1nmf

#endif  // WL1NMF_REDUCTION_H_
