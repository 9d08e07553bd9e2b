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

#include "wl1nmf/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wl1nmf/parallel.h"
#include "wl1nmf/random.h"
#include "wl1nmf/scd.h"
#include "wl1nmf/weighted_median.h"

namespace wl1nmf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// a * log(b) with 0 * log(0) = 0.
double xlogy(double a, double b) {
  if (a == 0.0) return 0.0;
  return b > 0.0 ? a * std::log(b) : kNegInf;
}

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

double sum_exp_ascending(std::vector<double>& log_terms) {
  std::vector<double> terms;
  terms.reserve(log_terms.size());
  for (double t : log_terms) {
    if (t != kNegInf) terms.push_back(std::exp(t));
  }
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

constexpr std::int64_t kBlock = 4096;

std::uint64_t block_seed(std::uint64_t seed, std::int64_t block) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (block + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool alpha1_positive(std::span<const double> x, std::span<const double> y) {
  if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; })) {
    return true;
  }
  const BreakpointProblem p{x, y, 0.0};
  const double alpha = constrained_weighted_median(p).value();
  if (alpha > 0.0) return true;
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (y[s] > 0.0 && x[s] > 0.0) smallest = std::min(smallest, x[s] / y[s]);
  }
  if (!std::isfinite(smallest)) return false;
  return lad_objective(p, smallest) <= lad_objective(p, 0.0);
}

bool alpha2_positive(std::span<const double> x, std::span<const double> y) {
  const auto alpha = nnls_scalar(x, y);
  return !alpha || *alpha > 0.0;
}

}  // namespace

void BernoulliLADSetting::validate() const {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
}

double prob_alpha1_positive(const BernoulliLADSetting& s) {
  s.validate();
  const int m = s.m;
  const double p = s.p;
  const double q = 1.0 - p;
  std::vector<double> terms;
  terms.push_back(xlogy(m, q));
  for (int k = 1; k <= m; ++k) {
    const double outer = xlogy(k, p) + xlogy(m - k, q) + log_choose(m, k);
    for (int i = 0; i <= k / 2; ++i) {
      terms.push_back(outer + xlogy(i, q) + xlogy(k - i, p) +
                      log_choose(k, i));
    }
  }
  return std::min(1.0, sum_exp_ascending(terms));
}

double prob_alpha2_positive(const BernoulliLADSetting& s) {
  s.validate();
  const int m = s.m;
  const double p = s.p;
  const double q = 1.0 - p;
  std::vector<double> terms;
  terms.push_back(xlogy(m, q));
  const double log1p_neg_p = std::log1p(-p);
  for (int k = 1; k <= m; ++k) {
    const double some_x = -std::expm1(k * log1p_neg_p);  // 1 - q^k
    if (!(some_x > 0.0)) continue;
    terms.push_back(xlogy(k, p) + xlogy(m - k, q) + log_choose(m, k) +
                    std::log(some_x));
  }
  return std::min(1.0, sum_exp_ascending(terms));
}

McEstimate prob_mc_estimate(const BernoulliLADSetting& s, Estimator which,
                            std::int64_t samples, std::uint64_t seed,
                            int threads) {
  s.validate();
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  if (threads < 1) throw InvalidArgument("threads must be >= 1");
  const std::int64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::int64_t> hits(blocks, 0);
  parallel_for(blocks, threads, [&](long begin, long end, int) {
    std::vector<double> x(s.m), y(s.m);
    for (long b = begin; b < end; ++b) {
      Rng rng(block_seed(seed, b));
      const std::int64_t count = std::min(kBlock, samples - b * kBlock);
      std::int64_t h = 0;
      for (std::int64_t t = 0; t < count; ++t) {
        for (int k = 0; k < s.m; ++k) {
          x[k] = rng.bernoulli(s.p) ? 1.0 : 0.0;
          y[k] = rng.bernoulli(s.p) ? 1.0 : 0.0;
        }
        const bool positive = which == Estimator::kAlpha1
                                  ? alpha1_positive(x, y)
                                  : alpha2_positive(x, y);
        h += positive ? 1 : 0;
      }
      hits[b] = h;
    }
  });
  std::int64_t total = 0;
  for (auto h : hits) total += h;
  McEstimate out;
  out.samples = samples;
  out.estimate = static_cast<double>(total) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) /
                            static_cast<double>(samples));
  return out;
}

double sigma_gain(std::int64_t m, std::int64_t n, std::int64_t nnz) {
  if (m < 0 || n < 0 || nnz < 0) {
    throw InvalidArgument("sigma_gain: negative dimension");
  }
  const double mn = static_cast<double>(m) * static_cast<double>(n);
  if (static_cast<double>(nnz) > mn) {
    throw InvalidArgument("sigma_gain: nnz exceeds m * n");
  }
  if (nnz < 2 || mn < 2.0) {
    throw NumericError("sigma_gain: undefined for nnz < 2 or m * n < 2");
  }
  const double z = static_cast<double>(nnz);
  return (mn * std::log(mn)) / (z * std::log(z));
}

ErrorReport error_report(const SparseNonnegMatrix& x, const DenseMatrix* truth,
                         const DenseMatrix& w, const DenseMatrix& h,
                         double lambda) {
  const double norm = x.l1_norm();
  if (!(norm > 0.0)) {
    throw NumericError("relative L1 error undefined: ||X||_1 = 0");
  }
  ErrorReport out;
  out.rel_l1 = objective(x, w, h, lambda) / norm;
  out.w_sparsity = factor_sparsity(w);
  out.h_sparsity = factor_sparsity(h);
  if (truth != nullptr) {
    if (truth->rows() != x.rows() || truth->cols() != x.cols()) {
      throw InvalidArgument("ground truth dimensions do not match X");
    }
    const DenseMatrix wh = multiply(w, h);
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t e = 0; e < wh.size(); ++e) {
      const double t = truth->data()[e];
      diff += (t - wh.data()[e]) * (t - wh.data()[e]);
      ref += t * t;
    }
    if (!(ref > 0.0)) throw NumericError("ground truth is zero");
    out.rel_fro_vs_truth = std::sqrt(diff) / std::sqrt(ref);
  }
  return out;
}

}  // namespace wl1nmf
