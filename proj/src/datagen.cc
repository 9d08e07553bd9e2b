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

#include "wl1nmf/datagen.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wl1nmf/random.h"

namespace wl1nmf {
namespace {

void check_dims(Index m, Index n) {
  if (m < 0 || n < 0) throw InvalidArgument("dimensions must be >= 0");
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
  }
}

// The first k entries of idx become a uniform random k-subset.
void partial_shuffle(std::vector<std::int64_t>& idx, std::size_t k, Rng& rng) {
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t pick = t + rng.below(idx.size() - t);
    std::swap(idx[t], idx[pick]);
  }
}

}  // namespace

SparseNonnegMatrix gen_uniform_sparse(Index m, Index n, double zero_frac,
                                      std::uint64_t seed) {
  check_dims(m, n);
  if (!(zero_frac >= 0.0 && zero_frac < 1.0)) {
    throw InvalidArgument("zero fraction must lie in [0, 1)");
  }
  Rng rng(seed);
  const std::int64_t total = static_cast<std::int64_t>(m) * n;
  const auto zeros =
      static_cast<std::size_t>(std::llround(zero_frac * static_cast<double>(total)));
  std::vector<std::int64_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  partial_shuffle(idx, zeros, rng);
  std::vector<char> is_zero(total, 0);
  for (std::size_t t = 0; t < zeros; ++t) is_zero[idx[t]] = 1;

  DenseMatrix a(m, n);
  for (std::int64_t e = 0; e < total; ++e) {
    if (!is_zero[e]) a.data()[e] = rng.uniform_pos();
  }
  return from_dense(a);
}

SparseNonnegMatrix gen_bernoulli(Index m, Index n, double p,
                                 std::uint64_t seed) {
  check_dims(m, n);
  check_probability(p, "p");
  Rng rng(seed);
  DenseMatrix a(m, n);
  for (double& v : a.data()) v = rng.bernoulli(p) ? 1.0 : 0.0;
  return from_dense(a);
}

FalseZeroInstance gen_lowrank_falsezeros(Index m, Index n, Index r,
                                         const LaplaceNoiseSpec& noise,
                                         const FalseZeroSpec& fz,
                                         std::uint64_t seed) {
  check_dims(m, n);
  if (r < 1) throw InvalidArgument("rank must be >= 1");
  if (!(noise.sigma > 0.0)) throw InvalidArgument("noise sigma must be > 0");
  if (!(fz.q1 >= 0.0 && fz.q1 < 1.0)) {
    throw InvalidArgument("q1 must lie in [0, 1)");
  }
  check_probability(fz.q2, "q2");

  Rng rng(seed);
  DenseMatrix w(m, r), h(r, n);
  for (double& v : w.data()) v = rng.uniform_open();
  for (double& v : h.data()) v = rng.uniform_open();
  FalseZeroInstance out;
  out.truth = multiply(w, h);

  const std::size_t total = out.truth.size();
  DenseMatrix noisy = out.truth;
  for (double& v : noisy.data()) {
    v += laplace_from_uniform(rng.uniform_open() - 0.5, noise.sigma);
    if (!(v > 0.0)) {
      v = 0.0;
      ++out.clipped;
    }
  }

  const double mn = static_cast<double>(total);
  out.type_one = std::llround(fz.q1 * fz.q2 * mn);
  out.type_two = std::llround(fz.q1 * (1.0 - fz.q2) * mn);
  std::vector<std::int64_t> positive;
  for (std::size_t e = 0; e < total; ++e) {
    if (noisy.data()[e] > 0.0) positive.push_back(static_cast<std::int64_t>(e));
  }
  if (out.type_one + out.type_two > static_cast<std::int64_t>(positive.size())) {
    throw InvalidArgument("false-zero quotas exceed the positive entries");
  }

  const auto& vals = noisy.data();
  std::stable_sort(positive.begin(), positive.end(),
                   [&](std::int64_t a, std::int64_t b) { return vals[a] < vals[b]; });
  std::vector<std::int64_t> rest(positive.begin() + out.type_one, positive.end());
  for (std::int64_t t = 0; t < out.type_one; ++t) noisy.data()[positive[t]] = 0.0;
  std::sort(rest.begin(), rest.end());
  partial_shuffle(rest, static_cast<std::size_t>(out.type_two), rng);
  for (std::int64_t t = 0; t < out.type_two; ++t) noisy.data()[rest[t]] = 0.0;

  out.x = from_dense(noisy);
  return out;
}

SparseNonnegMatrix gen_saltpepper(const SparseNonnegMatrix& x, double p,
                                  std::uint64_t seed) {
  check_probability(p, "p");
  for (double v : x.values()) {
    if (v > 1.0) throw InvalidArgument("salt-and-pepper input must lie in [0, 1]");
  }
  Rng rng(seed);
  DenseMatrix a = to_dense(x);
  for (double& v : a.data()) {
    if (rng.bernoulli(p)) v = v > 0.0 ? 0.0 : 1.0;
  }
  return from_dense(a);
}

double laplace_from_uniform(double u, double sigma) {
  if (u == 0.0) return 0.0;
  const double sign = u > 0.0 ? 1.0 : -1.0;
  return -sigma * sign * std::log1p(-2.0 * std::fabs(u));
}

std::vector<double> sample_laplace(const LaplaceNoiseSpec& spec,
                                   std::size_t count, std::uint64_t seed) {
  if (!(spec.sigma > 0.0)) throw InvalidArgument("noise sigma must be > 0");
  Rng rng(seed);
  std::vector<double> out(count);
  for (double& v : out) v = laplace_from_uniform(rng.uniform_open() - 0.5, spec.sigma);
  return out;
}

}  // namespace wl1nmf
