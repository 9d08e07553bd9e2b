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

// Sparsity of scalar fits on Bernoulli data, the theoretical sCD speedup,
// and error metrics.
//
// For x, y in {0,1}^m with i.i.d. Bernoulli(p) entries, alpha1 is the
// nonnegative LAD fit argmin_{a >= 0} ||x - a y||_1 and alpha2 the
// nonnegative least-squares fit. The event y = 0 counts as positive, and so
// does an LAD tie between 0 and a positive value.

#ifndef WL1NMF_ANALYSIS_H_
#define WL1NMF_ANALYSIS_H_

#include <cstdint>
#include <optional>

#include "wl1nmf/matrix.h"

namespace wl1nmf {

struct BernoulliLADSetting {
  int m = 1;
  double p = 0.5;

  // Throws InvalidArgument unless m >= 1 and 0 <= p <= 1.
  void validate() const;
};

// P(alpha1 > 0), evaluated in log space; stable for m in the thousands.
double prob_alpha1_positive(const BernoulliLADSetting& s);

// P(alpha2 > 0), evaluated in log space.
double prob_alpha2_positive(const BernoulliLADSetting& s);

enum class Estimator { kAlpha1, kAlpha2 };

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

// Monte Carlo estimate of P(alpha > 0). Samples are drawn in fixed blocks
// with per-block seeds, so the result depends on (seed, samples) only, not
// on `threads`.
McEstimate prob_mc_estimate(const BernoulliLADSetting& s, Estimator which,
                            std::int64_t samples, std::uint64_t seed,
                            int threads = 1);

// mn log(mn) / (nnz log nnz). Throws NumericError if nnz < 2 or mn < 2 and
// InvalidArgument if nnz > mn.
double sigma_gain(std::int64_t m, std::int64_t n, std::int64_t nnz);

struct ErrorReport {
  double rel_l1 = 0.0;
  std::optional<double> rel_fro_vs_truth;
  double w_sparsity = 0.0;
  double h_sparsity = 0.0;
};

// rel_l1 = objective(X, W, H, lambda) / ||X||_1 (NumericError if ||X||_1 =
// 0). rel_fro_vs_truth = ||T - WH||_F / ||T||_F when `truth` is given.
ErrorReport error_report(const SparseNonnegMatrix& x, const DenseMatrix* truth,
                         const DenseMatrix& w, const DenseMatrix& h,
                         double lambda);

}  // namespace wl1nmf

#endif  // WL1NMF_ANALYSIS_H_
