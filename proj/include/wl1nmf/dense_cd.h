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

// Plain coordinate descent for L1-NMF on the dense residual. Every scalar
// subproblem has m terms regardless of sparsity. Kept as a reference for the
// sparse solver and as the baseline in benchmarks.

#ifndef WL1NMF_DENSE_CD_H_
#define WL1NMF_DENSE_CD_H_

#include "wl1nmf/matrix.h"
#include "wl1nmf/problem.h"

namespace wl1nmf {

// One pass over the columns of H (ascending), coordinates ascending, each
// set to the weighted median of its full m-term subproblem. Returns
// ||X - WH||_1 at the updated H.
double update_h_dense(const DenseMatrix& x, const DenseMatrix& w,
                      DenseMatrix& h);

// Same schedule, initialization and stopping rule as scd(). Requires
// problem.lambda == 1.
SolveResult cd_dense(const WL1Problem& problem);

}  // namespace wl1nmf

#endif  // WL1NMF_DENSE_CD_H_
