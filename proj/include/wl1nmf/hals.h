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

// HALS: coordinate descent for Frobenius NMF. Used to warm-start the L1
// solvers and as a least-squares baseline.

#ifndef WL1NMF_HALS_H_
#define WL1NMF_HALS_H_

#include "wl1nmf/matrix.h"
#include "wl1nmf/problem.h"
#include "wl1nmf/random.h"

namespace wl1nmf {

// One sweep: every column of W, then every row of H, each set to its
// projected least-squares optimum with the others fixed.
//
// A coordinate whose Gram diagonal is zero is skipped. After the sweep, a
// rank-one component i that is dead (W(:,i) = 0 or H(i,:) = 0) is revived by
// drawing W(:,i) ~ Uniform(0, mean(X)) and setting H(i,:) = 0, which leaves
// WH and hence the objective unchanged.
void hals_sweep(const SparseNonnegMatrix& x, DenseMatrix& w, DenseMatrix& h,
                Rng& rng);

// ||X - WH||_F^2 without forming WH.
double frobenius_error_sq(const SparseNonnegMatrix& x, const DenseMatrix& w,
                          const DenseMatrix& h);

// Uniform(0,1) factors (W column-major first, then H), deterministic in rng.
FactorPair random_factors(Index m, Index n, Index r, Rng& rng);

// Random factors from problem.seed refined by `sweeps` HALS sweeps.
FactorPair hals_init(const WL1Problem& problem, int sweeps);

// Applies problem.init. ExplicitInit factors are validated against X.
FactorPair make_initial_factors(const WL1Problem& problem);

// HALS as a standalone FroNMF solver. Stops on relative Frobenius-error
// change < tolerance (or the sweep/time budget). The trace records the
// weighted L1 objective at problem.lambda for comparability.
SolveResult hals_solve(const WL1Problem& problem);

}  // namespace wl1nmf

#endif  // WL1NMF_HALS_H_
