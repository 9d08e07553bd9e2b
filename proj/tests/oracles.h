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

// Independent reference computations for tests. Nothing here calls into the
// library's solvers; everything is evaluated from definitions by brute force.

#ifndef WL1NMF_TESTS_ORACLES_H_
#define WL1NMF_TESTS_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "wl1nmf/matrix.h"

namespace wl1nmf::oracle {

// sum_s |x_s - a y_s| + c a
inline double lad(const std::vector<double>& x, const std::vector<double>& y,
                  double c, double a) {
  double f = c * a;
  for (std::size_t s = 0; s < x.size(); ++s) f += std::fabs(x[s] - a * y[s]);
  return f;
}

struct ScalarMin {
  double value;
  double argmin;  // smallest minimizer among the candidates
};

// Minimum of the LAD objective over {0} and every positive breakpoint.
inline ScalarMin lad_min(const std::vector<double>& x,
                         const std::vector<double>& y, double c) {
  std::vector<double> cand{0.0};
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (y[s] > 0.0 && x[s] / y[s] > 0.0) cand.push_back(x[s] / y[s]);
  }
  ScalarMin best{std::numeric_limits<double>::infinity(), 0.0};
  for (double a : cand) {
    const double f = lad(x, y, c, a);
    if (f < best.value || (f == best.value && a < best.argmin)) best = {f, a};
  }
  return best;
}

// Weighted L1 objective from the definition, on dense X.
inline double weighted_l1(const DenseMatrix& x, const DenseMatrix& w,
                          const DenseMatrix& h, double lambda) {
  double f = 0.0;
  for (Index j = 0; j < x.cols(); ++j) {
    for (Index i = 0; i < x.rows(); ++i) {
      double v = 0.0;
      for (Index t = 0; t < w.cols(); ++t) v += w(i, t) * h(t, j);
      f += x(i, j) > 0.0 ? std::fabs(x(i, j) - v) : lambda * std::fabs(v);
    }
  }
  return f;
}

inline double frobenius(const DenseMatrix& a, const DenseMatrix& b) {
  double f = 0.0;
  for (std::size_t e = 0; e < a.size(); ++e) {
    f += (a.data()[e] - b.data()[e]) * (a.data()[e] - b.data()[e]);
  }
  return std::sqrt(f);
}

// Exact P(alpha > 0) for x, y in {0,1}^m i.i.d. Bernoulli(p), by summing the
// probability of every one of the 4^m outcomes. The LAD fit counts as
// positive when y = 0 or when some positive alpha does at least as well as
// alpha = 0; the least-squares fit when y = 0 or x'y > 0.
inline double enumerate_positive(int m, double p, bool lad_fit) {
  double total = 0.0;
  const std::uint32_t outcomes = 1u << (2 * m);
  for (std::uint32_t bits = 0; bits < outcomes; ++bits) {
    std::vector<double> x(m), y(m);
    int ones = 0;
    for (int s = 0; s < m; ++s) {
      x[s] = (bits >> s) & 1u;
      y[s] = (bits >> (m + s)) & 1u;
      ones += static_cast<int>(x[s] + y[s]);
    }
    const double prob = std::pow(p, ones) * std::pow(1.0 - p, 2 * m - ones);
    bool y_zero = true;
    for (double v : y) y_zero = y_zero && v == 0.0;
    bool positive;
    if (y_zero) {
      positive = true;
    } else if (lad_fit) {
      const double at_zero = lad(x, y, 0.0, 0.0);
      positive = false;
      for (int s = 0; s < m; ++s) {
        if (y[s] > 0.0 && x[s] > 0.0) {
          positive = positive || lad(x, y, 0.0, x[s] / y[s]) <= at_zero;
        }
      }
    } else {
      double xy = 0.0;
      for (int s = 0; s < m; ++s) xy += x[s] * y[s];
      positive = xy > 0.0;
    }
    if (positive) total += prob;
  }
  return total;
}

inline DenseMatrix random_dense(Index m, Index n, double zero_frac,
                                std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  DenseMatrix a(m, n);
  for (double& v : a.data()) v = u(gen) < zero_frac ? 0.0 : u(gen) + 1e-3;
  return a;
}

}  // namespace wl1nmf::oracle

#endif  // WL1NMF_TESTS_ORACLES_H_
