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

// AVX2 variants. This file is compiled with -mavx2 (and no FMA) and must only
// be entered after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "wl1nmf/kernels.h"

namespace wl1nmf::kernels {
namespace {

inline double finish(__m256d acc, const double* tail_a, const double* tail_b,
                     std::size_t begin, std::size_t n, int mode) {
  alignas(32) double s[4];
  _mm256_store_pd(s, acc);
  for (std::size_t k = begin; k < n; ++k) {
    double v;
    switch (mode) {
      case 0: v = tail_a[k]; break;
      case 1: v = tail_a[k] * tail_b[k]; break;
      default: v = std::fabs(tail_a[k] - tail_b[k]); break;
    }
    s[k & 3] += v;
  }
  return (s[0] + s[1]) + (s[2] + s[3]);
}

void gather(const double* src, const Index* idx, std::size_t n, double* out) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m128i vi =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + k));
    _mm256_storeu_pd(out + k, _mm256_i32gather_pd(src, vi, 8));
  }
  for (; k < n; ++k) out[k] = src[idx[k]];
}

void row_dot(const double* block, std::size_t ld, std::size_t r,
             const double* coef, std::size_t n, double* out) {
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (std::size_t t = 0; t < r; ++t) {
      const __m256d c = _mm256_set1_pd(coef[t]);
      const double* col = block + t * ld + k;
      acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(col), c));
      acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(col + 4), c));
    }
    _mm256_storeu_pd(out + k, acc0);
    _mm256_storeu_pd(out + k + 4, acc1);
  }
  for (; k + 4 <= n; k += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t t = 0; t < r; ++t) {
      acc = _mm256_add_pd(
          acc, _mm256_mul_pd(_mm256_loadu_pd(block + t * ld + k),
                             _mm256_set1_pd(coef[t])));
    }
    _mm256_storeu_pd(out + k, acc);
  }
  for (; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t t = 0; t < r; ++t) acc = acc + block[t * ld + k] * coef[t];
    out[k] = acc;
  }
}

void numerators(const double* data, const double* fit, const double* basis,
                double h, std::size_t n, double* out) {
  const __m256d vh = _mm256_set1_pd(h);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d = _mm256_loadu_pd(data + k);
    const __m256d t = _mm256_add_pd(
        _mm256_sub_pd(d, _mm256_loadu_pd(fit + k)),
        _mm256_mul_pd(_mm256_loadu_pd(basis + k), vh));
    // min_pd(a, b) returns a < b ? a : b, matching the scalar form.
    _mm256_storeu_pd(out + k, _mm256_min_pd(t, d));
  }
  for (; k < n; ++k) {
    const double t = (data[k] - fit[k]) + basis[k] * h;
    out[k] = t < data[k] ? t : data[k];
  }
}

void axpy(double a, const double* x, std::size_t n, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(
        y + k, _mm256_add_pd(_mm256_loadu_pd(y + k),
                             _mm256_mul_pd(_mm256_loadu_pd(x + k), va)));
  }
  for (; k < n; ++k) y[k] = y[k] + x[k] * a;
}

void divide(const double* num, const double* den, std::size_t n, double* out) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(out + k, _mm256_div_pd(_mm256_loadu_pd(num + k),
                                            _mm256_loadu_pd(den + k)));
  }
  for (; k < n; ++k) out[k] = num[k] / den[k];
}

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + k));
  return finish(acc, x, nullptr, k, n, 0);
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
  }
  return finish(acc, x, y, k, n, 1);
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, d));
  }
  return finish(acc, a, b, k, n, 2);
}

constexpr KernelTable kAvx2Table = {
    Isa::kAvx2, "avx2", gather, row_dot,      numerators, axpy,
    divide,     sum,    dot,    abs_diff_sum,
};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace wl1nmf::kernels
