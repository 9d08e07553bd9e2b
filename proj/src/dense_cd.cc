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

#include "wl1nmf/dense_cd.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "wl1nmf/hals.h"
#include "wl1nmf/kernels.h"
#include "wl1nmf/weighted_median.h"

namespace wl1nmf {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

double update_h_dense(const DenseMatrix& x, const DenseMatrix& w,
                      DenseMatrix& h) {
  if (w.rows() != x.rows() || h.cols() != x.cols() || w.cols() != h.rows()) {
    throw InvalidArgument("factor dimensions do not match X");
  }
  if (!is_nonnegative(x) || !is_nonnegative(w) || !is_nonnegative(h)) {
    throw InvalidArgument("dense CD inputs must be nonnegative");
  }
  const auto& k = kernels::active();
  const std::size_t m = static_cast<std::size_t>(x.rows());
  const std::size_t r = static_cast<std::size_t>(w.cols());
  std::vector<double> fit(m), num(m), ratio(m);
  WeightedMedianWorkspace median;
  double error = 0.0;
  for (Index j = 0; j < x.cols(); ++j) {
    const double* data = x.col(j).data();
    auto h_col = h.col(j);
    k.row_dot(w.data().data(), m, r, h_col.data(), m, fit.data());
    for (std::size_t i = 0; i < r; ++i) {
      const double* basis = w.col(static_cast<Index>(i)).data();
      k.numerators(data, fit.data(), basis, h_col[i], m, num.data());
      k.divide(num.data(), basis, m, ratio.data());
      const auto alpha =
          median.solve(ratio, std::span<const double>(basis, m), 0.0);
      if (!alpha) continue;
      const double delta = *alpha - h_col[i];
      if (delta != 0.0) {
        k.axpy(delta, basis, m, fit.data());
        h_col[i] = *alpha;
      }
    }
    error += k.abs_diff_sum(data, fit.data(), m);
  }
  return error;
}

SolveResult cd_dense(const WL1Problem& problem) {
  problem.validate();
  if (problem.lambda != 1.0) {
    throw InvalidArgument("dense CD is defined for lambda = 1 only");
  }
  const auto& x = problem.x;
  SolveResult out;
  const auto t_init = std::chrono::steady_clock::now();
  out.factors = make_initial_factors(problem);
  out.trace.init_seconds = seconds_since(t_init);
  auto& f = out.factors;

  if (problem.rank >= std::min(x.rows(), x.cols())) {
    std::ostringstream msg;
    msg << "rank " << problem.rank << " >= min(m, n) = "
        << std::min(x.rows(), x.cols());
    out.trace.warnings.push_back(msg.str());
  }
  if (x.nnz() == 0) {
    std::fill(f.w.data().begin(), f.w.data().end(), 0.0);
    std::fill(f.h.data().begin(), f.h.data().end(), 0.0);
    out.trace.stop_reason = StopReason::kEmptyInput;
    return out;
  }

  const double norm = x.l1_norm();
  const DenseMatrix xd = to_dense(x);
  const DenseMatrix xdt = xd.transposed();
  out.trace.initial_objective = 0.0;
  {
    const DenseMatrix wh = f.product();
    for (std::size_t e = 0; e < wh.size(); ++e) {
      out.trace.initial_objective += std::fabs(xd.data()[e] - wh.data()[e]);
    }
  }
  double prev = out.trace.initial_objective / norm;
  DenseMatrix wt = f.w.transposed();
  const auto t0 = std::chrono::steady_clock::now();
  for (int sweep = 1; sweep <= problem.stop.max_sweeps; ++sweep) {
    DenseMatrix ht = f.h.transposed();
    update_h_dense(xdt, ht, wt);
    f.w = wt.transposed();
    const double obj = update_h_dense(xd, f.w, f.h);
    out.trace.sweeps.push_back({sweep, obj, seconds_since(t0),
                                factor_sparsity(f.w), factor_sparsity(f.h)});
    const double rel = obj / norm;
    if (!problem.stop.fixed_sweeps &&
        std::fabs(prev - rel) < problem.stop.tolerance) {
      out.trace.stop_reason = StopReason::kConverged;
      break;
    }
    prev = rel;
    if (seconds_since(t0) >= problem.stop.time_limit_seconds) {
      out.trace.stop_reason = StopReason::kTimeLimit;
      break;
    }
  }
  if (out.trace.stop_reason == StopReason::kNone) {
    out.trace.stop_reason = StopReason::kMaxSweeps;
  }
  return out;
}

}  // namespace wl1nmf
