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

// Synthetic data. Every generator is a pure function of its arguments and
// seed (see Rng for the engine).

#ifndef WL1NMF_DATAGEN_H_
#define WL1NMF_DATAGEN_H_

#include <cstdint>
#include <vector>

#include "wl1nmf/matrix.h"

namespace wl1nmf {

// Exactly round(zero_frac * m * n) uniformly chosen entries are zero; the
// rest are Uniform(0, 1].
SparseNonnegMatrix gen_uniform_sparse(Index m, Index n, double zero_frac,
                                      std::uint64_t seed);

// I.i.d. Bernoulli(p) entries.
SparseNonnegMatrix gen_bernoulli(Index m, Index n, double p,
                                 std::uint64_t seed);

struct LaplaceNoiseSpec {
  double sigma = 0.1;  // diversity (scale)
};

struct FalseZeroSpec {
  double q1 = 0.5;  // fraction of all entries set to zero
  double q2 = 0.5;  // share of those taken from the smallest entries
};

struct FalseZeroInstance {
  SparseNonnegMatrix x;
  DenseMatrix truth;  // noiseless W H
  std::int64_t clipped = 0;     // noisy entries that fell to <= 0
  std::int64_t type_one = 0;    // smallest entries zeroed
  std::int64_t type_two = 0;    // random entries zeroed
};

// X = clip(W H + N) with W, H ~ Uniform(0,1) and N Laplace. Then the
// round(q1 q2 m n) smallest positive entries (ties by column-major index)
// and round(q1 (1 - q2) m n) random remaining positive entries are zeroed.
// Throws InvalidArgument if the quotas exceed the positive entries.
FalseZeroInstance gen_lowrank_falsezeros(Index m, Index n, Index r,
                                         const LaplaceNoiseSpec& noise,
                                         const FalseZeroSpec& fz,
                                         std::uint64_t seed);

// With probability p per entry: zeros become 1, positives become 0.
// Values must lie in [0, 1].
SparseNonnegMatrix gen_saltpepper(const SparseNonnegMatrix& x, double p,
                                  std::uint64_t seed);

// Inverse-CDF transform of u in (-1/2, 1/2); returns 0 at u = 0.
double laplace_from_uniform(double u, double sigma);

std::vector<double> sample_laplace(const LaplaceNoiseSpec& spec,
                                   std::size_t count, std::uint64_t seed);

}  // namespace wl1nmf

#endif  // WL1NMF_DATAGEN_H_
