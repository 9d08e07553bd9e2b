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

#include "wl1nmf/scd.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "wl1nmf/hals.h"
#include "wl1nmf/kernels.h"
#include "wl1nmf/parallel.h"

namespace wl1nmf {
namespace {

void check_inputs(const SparseNonnegMatrix& x, const DenseMatrix& w,
                  const DenseMatrix& h, double lambda) {
  if (w.rows() != x.rows() || h.cols() != x.cols() || w.cols() != h.rows()) {
    throw InvalidArgument("factor dimensions do not match X");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InvalidArgument("lambda must lie in [0, 1]");
  }
  if (!is_nonnegative(w) || !is_nonnegative(h)) {
    throw InvalidArgument("factors must be nonnegative");
  }
}

std::vector<double> column_sums(const DenseMatrix& w) {
  const auto& k = kernels::active();
  std::vector<double> s(w.cols());
  for (Index i = 0; i < w.cols(); ++i) s[i] = k.sum(w.col(i).data(), w.rows());
  return s;
}

std::vector<double> row_sums(const DenseMatrix& h) {
  std::vector<double> s(h.rows(), 0.0);
  for (Index j = 0; j < h.cols(); ++j) {
    for (Index i = 0; i < h.rows(); ++i) s[i] += h(i, j);
  }
  return s;
}

// (e'W)(He)
double fitted_l1(const DenseMatrix& w, const DenseMatrix& h) {
  const auto cs = column_sums(w);
  const auto rs = row_sums(h);
  double total = 0.0;
  for (std::size_t i = 0; i < cs.size(); ++i) total += cs[i] * rs[i];
  return total;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

void ColumnWorkspace::load(const SparseNonnegMatrix& x, const DenseMatrix& w,
                           Index j, std::span<const double> h_col) {
  const auto& k = kernels::active();
  const auto rows = x.col_rows(j);
  const std::size_t r = static_cast<std::size_t>(w.cols());
  data_ = x.col_values(j);
  q_ = rows.size();
  block_.resize(q_ * r);
  fit_.resize(q_);
  num_.resize(q_);
  ratio_.resize(q_);
  if (q_ == 0) return;
  for (std::size_t i = 0; i < r; ++i) {
    k.gather(w.col(static_cast<Index>(i)).data(), rows.data(), q_,
             block_.data() + i * q_);
  }
  k.row_dot(block_.data(), q_, r, h_col.data(), q_, fit_.data());
}

double ColumnWorkspace::update(std::span<double> h_col,
                               std::span<const double> col_sums,
                               double lambda) {
  const auto& k = kernels::active();
  const std::size_t r = h_col.size();
  if (q_ == 0) {
    for (std::size_t i = 0; i < r; ++i) {
      if (lambda * col_sums[i] > 0.0) h_col[i] = 0.0;
    }
    return 0.0;
  }
  for (std::size_t i = 0; i < r; ++i) {
    const double* basis = block_.data() + i * q_;
    const double c =
        std::max(0.0, lambda * (col_sums[i] - k.sum(basis, q_)));
    k.numerators(data_.data(), fit_.data(), basis, h_col[i], q_, num_.data());
    k.divide(num_.data(), basis, q_, ratio_.data());
    const auto alpha =
        median_.solve(ratio_, std::span<const double>(basis, q_), c);
    if (!alpha) continue;
    const double delta = *alpha - h_col[i];
    if (delta != 0.0) {
      k.axpy(delta, basis, q_, fit_.data());
      h_col[i] = *alpha;
    }
  }
  return k.abs_diff_sum(data_.data(), fit_.data(), q_) -
         lambda * k.sum(fit_.data(), q_);
}

double update_h(const SparseNonnegMatrix& x, const DenseMatrix& w,
                DenseMatrix& h, double lambda, int threads) {
  check_inputs(x, w, h, lambda);
  if (threads < 1) throw InvalidArgument("threads must be >= 1");
  const auto col_sums = column_sums(w);
  const Index n = x.cols();
  std::vector<double> share(n, 0.0);
  parallel_for(n, threads, [&](long begin, long end, int) {
    ColumnWorkspace ws;
    for (long j = begin; j < end; ++j) {
      const Index jj = static_cast<Index>(j);
      ws.load(x, w, jj, h.col(jj));
      share[j] = ws.update(h.col(jj), col_sums, lambda);
    }
  });
  double total = 0.0;
  for (double s : share) total += s;
  return total + lambda * fitted_l1(w, h);
}

double objective(const SparseNonnegMatrix& x, const DenseMatrix& w,
                 const DenseMatrix& h, double lambda) {
  check_inputs(x, w, h, lambda);
  const auto& k = kernels::active();
  const std::size_t r = static_cast<std::size_t>(w.cols());
  const DenseMatrix wt = w.transposed();
  double residual = 0.0;
  double fitted_on_support = 0.0;
  for (Index j = 0; j < x.cols(); ++j) {
    const auto rows = x.col_rows(j);
    const auto vals = x.col_values(j);
    for (std::size_t e = 0; e < rows.size(); ++e) {
      const double v = k.dot(wt.col(rows[e]).data(), h.col(j).data(), r);
      residual += std::fabs(vals[e] - v);
      fitted_on_support += v;
    }
  }
  return residual + lambda * (fitted_l1(w, h) - fitted_on_support);
}

bool zero_update_predicate(std::span<const double> x,
                           std::span<const double> w_col, double c) {
  if (x.size() != w_col.size()) {
    throw InvalidArgument("zero_update_predicate: length mismatch");
  }
  double negative = 0.0;
  double total = 0.0;
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (x[s] < 0.0) negative += w_col[s];
    total += w_col[s];
  }
  return negative + c / 2.0 > total / 2.0;
}

SolveResult scd(const WL1Problem& problem) {
  problem.validate();
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
  const SparseNonnegMatrix xt = transpose(x);
  out.trace.initial_objective = objective(x, f.w, f.h, problem.lambda);
  double prev = out.trace.initial_objective / norm;
  DenseMatrix wt = f.w.transposed();
  const auto t0 = std::chrono::steady_clock::now();
  for (int sweep = 1; sweep <= problem.stop.max_sweeps; ++sweep) {
    DenseMatrix ht = f.h.transposed();
    update_h(xt, ht, wt, problem.lambda, problem.threads);
    f.w = wt.transposed();
    const double obj =
        update_h(x, f.w, f.h, problem.lambda, problem.threads);
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
