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

// Data-parallel inner loops used by the coordinate-descent solvers.
//
// Every kernel has a scalar reference implementation and, where the build
// and CPU allow it, an AVX2 variant. The variant is picked once at startup
// (see active()) and can be overridden with select() or the WL1NMF_ISA
// environment variable ("scalar" or "avx2").
//
// All variants are bit-identical to the scalar reference:
//  - elementwise kernels perform the same IEEE operations per element and
//    are built without floating-point contraction;
//  - reductions use four interleaved partial sums (element k goes to lane
//    k % 4) combined as (s0 + s1) + (s2 + s3), which is exactly what one
//    256-bit accumulator computes.

#ifndef WL1NMF_KERNELS_H_
#define WL1NMF_KERNELS_H_

#include <cstddef>
#include <string_view>

#include "wl1nmf/common.h"

namespace wl1nmf::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  // out[k] = src[idx[k]]
  void (*gather)(const double* src, const Index* idx, std::size_t n,
                 double* out);

  // out[k] = sum_t block[t * ld + k] * coef[t], accumulated in t order.
  void (*row_dot)(const double* block, std::size_t ld, std::size_t r,
                  const double* coef, std::size_t n, double* out);

  // LAD numerators of one coordinate subproblem:
  //   out[k] = min((data[k] - fit[k]) + basis[k] * h, data[k]).
  // The clamp encodes that the contribution of the other coordinates is
  // nonnegative; it only ever removes rounding residue.
  void (*numerators)(const double* data, const double* fit,
                     const double* basis, double h, std::size_t n,
                     double* out);

  // y[k] += x[k] * a
  void (*axpy)(double a, const double* x, std::size_t n, double* y);

  // out[k] = num[k] / den[k]
  void (*divide)(const double* num, const double* den, std::size_t n,
                 double* out);

  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum_k |a[k] - b[k]|
  double (*abs_diff_sum)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_table();
// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool cpu_supports(Isa isa);

// Best variant supported by this build and CPU, unless overridden.
const KernelTable& active();

// Forces a variant. Throws InvalidArgument if it is unavailable.
void select(Isa isa);

// Parses "scalar" / "avx2".
Isa parse_isa(std::string_view name);

}  // namespace wl1nmf::kernels

#endif  // WL1NMF_KERNELS_H_
