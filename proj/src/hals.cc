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

#include "wl1nmf/hals.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "wl1nmf/kernels.h"
#include "wl1nmf/scd.h"

namespace wl1nmf {
namespace {

// Gram matrix A'A for a column-major A, r x r.
DenseMatrix gram_of_columns(const DenseMatrix& a) {
  const auto& k = kernels::active();
  const Index r = a.cols();
  DenseMatrix g(r, r);
  for (Index p = 0; p < r; ++p) {
    for (Index q = p; q < r; ++q) {
      const double v = k.dot(a.col(p).data(), a.col(q).data(), a.rows());
      g(p, q) = v;
      g(q, p) = v;
    }
  }
  return g;
}

// Projected coordinate updates of one factor row `f` (length r):
//   f[i] <- max(0, f[i] + (rhs[i] - sum_t gram(i,t) f[t]) / gram(i,i)).
void update_row(std::span<double> f, std::span<const double> rhs,
                const DenseMatrix& gram) {
  const Index r = static_cast<Index>(f.size());
  for (Index i = 0; i < r; ++i) {
    const double d = gram(i, i);
    if (!(d > 0.0)) continue;
    double g = rhs[i];
    for (Index t = 0; t < r; ++t) g -= gram(i, t) * f[t];
    f[i] = std::max(0.0, f[i] + g / d);
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

void hals_sweep(const SparseNonnegMatrix& x, DenseMatrix& w, DenseMatrix& h,
                Rng& rng) {
  const Index m = x.rows();
  const Index n = x.cols();
  const Index r = w.cols();
  if (w.rows() != m || h.rows() != r || h.cols() != n) {
    throw InvalidArgument("hals_sweep: factor dimensions do not match X");
  }
  const auto& k = kernels::active();

  // W pass, one row of W at a time (rows are independent).
  {
    DenseMatrix xht(r, m);  // (X H')', column s holds row s of X H'
    for (Index j = 0; j < n; ++j) {
      auto rows = x.col_rows(j);
      auto vals = x.col_values(j);
      for (std::size_t e = 0; e < rows.size(); ++e) {
        k.axpy(vals[e], h.col(j).data(), r, xht.col(rows[e]).data());
      }
    }
    const DenseMatrix hht = gram_of_columns(h.transposed());
    DenseMatrix wt = w.transposed();
    for (Index s = 0; s < m; ++s) update_row(wt.col(s), xht.col(s), hht);
    w = wt.transposed();
  }

  // H pass, one column of H at a time.
  {
    const DenseMatrix wt = w.transposed();
    const DenseMatrix wtw = gram_of_columns(w);
    std::vector<double> rhs(r);
    for (Index j = 0; j < n; ++j) {
      std::fill(rhs.begin(), rhs.end(), 0.0);
      auto rows = x.col_rows(j);
      auto vals = x.col_values(j);
      for (std::size_t e = 0; e < rows.size(); ++e) {
        k.axpy(vals[e], wt.col(rows[e]).data(), r, rhs.data());
      }
      update_row(h.col(j), rhs, wtw);
    }
  }

  const double mean =
      (m > 0 && n > 0) ? x.l1_norm() / (static_cast<double>(m) * n) : 0.0;
  for (Index i = 0; i < r; ++i) {
    auto wi = w.col(i);
    const bool w_dead =
        std::all_of(wi.begin(), wi.end(), [](double v) { return v == 0.0; });
    bool h_dead = true;
    for (Index j = 0; j < n && h_dead; ++j) h_dead = h(i, j) == 0.0;
    if (!w_dead && !h_dead) continue;
    for (double& v : wi) v = mean * rng.uniform();
    for (Index j = 0; j < n; ++j) h(i, j) = 0.0;
  }
}

double frobenius_error_sq(const SparseNonnegMatrix& x, const DenseMatrix& w,
                          const DenseMatrix& h) {
  const auto& k = kernels::active();
  const Index r = w.cols();
  const DenseMatrix wt = w.transposed();
  double on_support = 0.0;  // sum over nonzeros of (X - WH)^2 - (WH)^2
  for (Index j = 0; j < x.cols(); ++j) {
    auto rows = x.col_rows(j);
    auto vals = x.col_values(j);
    for (std::size_t e = 0; e < rows.size(); ++e) {
      const double v = k.dot(wt.col(rows[e]).data(), h.col(j).data(), r);
      on_support += vals[e] * (vals[e] - 2.0 * v);
    }
  }
  const DenseMatrix wtw = gram_of_columns(w);
  const DenseMatrix hht = gram_of_columns(h.transposed());
  double fit = 0.0;
  for (Index p = 0; p < r; ++p) {
    for (Index q = 0; q < r; ++q) fit += wtw(p, q) * hht(p, q);
  }
  return std::max(0.0, on_support + fit);
}

FactorPair random_factors(Index m, Index n, Index r, Rng& rng) {
  FactorPair f{DenseMatrix(m, r), DenseMatrix(r, n)};
  for (double& v : f.w.data()) v = rng.uniform();
  for (double& v : f.h.data()) v = rng.uniform();
  return f;
}

FactorPair hals_init(const WL1Problem& problem, int sweeps) {
  if (sweeps < 0) throw InvalidArgument("hals_init: sweeps must be >= 0");
  Rng rng(problem.seed);
  FactorPair f =
      random_factors(problem.x.rows(), problem.x.cols(), problem.rank, rng);
  for (int s = 0; s < sweeps; ++s) hals_sweep(problem.x, f.w, f.h, rng);
  return f;
}

FactorPair make_initial_factors(const WL1Problem& problem) {
  if (const auto* e = std::get_if<ExplicitInit>(&problem.init)) {
    validate_factors(e->factors);
    if (e->factors.w.rows() != problem.x.rows() ||
        e->factors.h.cols() != problem.x.cols() ||
        e->factors.rank() != problem.rank) {
      throw InvalidArgument("explicit initial factors do not match X and rank");
    }
    return e->factors;
  }
  if (const auto* h = std::get_if<HalsInit>(&problem.init)) {
    return hals_init(problem, h->sweeps);
  }
  return hals_init(problem, 0);
}

SolveResult hals_solve(const WL1Problem& problem) {
  problem.validate();
  SolveResult out;
  const auto t_init = std::chrono::steady_clock::now();
  out.factors = make_initial_factors(problem);
  out.trace.init_seconds = seconds_since(t_init);
  if (problem.x.nnz() == 0) {
    std::fill(out.factors.w.data().begin(), out.factors.w.data().end(), 0.0);
    std::fill(out.factors.h.data().begin(), out.factors.h.data().end(), 0.0);
    out.trace.stop_reason = StopReason::kEmptyInput;
    return out;
  }
  double norm_fro = 0.0;
  for (double v : problem.x.values()) norm_fro += v * v;
  norm_fro = std::sqrt(norm_fro);

  auto& f = out.factors;
  out.trace.initial_objective = objective(problem.x, f.w, f.h, problem.lambda);
  Rng rng(problem.seed ^ 0x9e3779b97f4a7c15ULL);
  double prev =
      std::sqrt(frobenius_error_sq(problem.x, f.w, f.h)) / norm_fro;
  const auto t0 = std::chrono::steady_clock::now();
  for (int sweep = 1; sweep <= problem.stop.max_sweeps; ++sweep) {
    hals_sweep(problem.x, f.w, f.h, rng);
    const double rel =
        std::sqrt(frobenius_error_sq(problem.x, f.w, f.h)) / norm_fro;
    out.trace.sweeps.push_back({sweep,
                                objective(problem.x, f.w, f.h, problem.lambda),
                                seconds_since(t0), factor_sparsity(f.w),
                                factor_sparsity(f.h)});
    if (!problem.stop.fixed_sweeps &&
        std::fabs(rel - prev) < problem.stop.tolerance) {
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
