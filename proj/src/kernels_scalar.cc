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

#include <cmath>

#include "wl1nmf/kernels.h"

namespace wl1nmf::kernels {
namespace {

void gather(const double* src, const Index* idx, std::size_t n, double* out) {
  for (std::size_t k = 0; k < n; ++k) out[k] = src[idx[k]];
}

void row_dot(const double* block, std::size_t ld, std::size_t r,
             const double* coef, std::size_t n, double* out) {
  for (std::size_t k = 0; k < n; ++k) out[k] = 0.0;
  for (std::size_t t = 0; t < r; ++t) {
    const double c = coef[t];
    const double* col = block + t * ld;
    for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + col[k] * c;
  }
}

void numerators(const double* data, const double* fit, const double* basis,
                double h, std::size_t n, double* out) {
  for (std::size_t k = 0; k < n; ++k) {
    const double t = (data[k] - fit[k]) + basis[k] * h;
    out[k] = t < data[k] ? t : data[k];
  }
}

void axpy(double a, const double* x, std::size_t n, double* y) {
  for (std::size_t k = 0; k < n; ++k) y[k] = y[k] + x[k] * a;
}

void divide(const double* num, const double* den, std::size_t n, double* out) {
  for (std::size_t k = 0; k < n; ++k) out[k] = num[k] / den[k];
}

double sum(const double* x, std::size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) s[k & 3] += x[k];
  return (s[0] + s[1]) + (s[2] + s[3]);
}

double dot(const double* x, const double* y, std::size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) s[k & 3] += x[k] * y[k];
  return (s[0] + s[1]) + (s[2] + s[3]);
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) s[k & 3] += std::fabs(a[k] - b[k]);
  return (s[0] + s[1]) + (s[2] + s[3]);
}

constexpr KernelTable kScalarTable = {
    Isa::kScalar, "scalar", gather, row_dot,      numerators, axpy,
    divide,       sum,      dot,    abs_diff_sum,
};

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

}  // namespace wl1nmf::kernels
