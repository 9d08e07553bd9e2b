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

#include "wl1nmf/reduction.h"

#include <cmath>
#include <limits>
#include <string>

namespace wl1nmf {
namespace {

void check_signs(const std::vector<double>& a, const char* what) {
  for (double e : a) {
    if (e != 1.0 && e != -1.0) {
      throw InvalidArgument(std::string(what) + " must have entries +1 or -1");
    }
  }
}

// Minimizes over binary `right` for a fixed binary `left`; returns the error.
double fit_other_side(const DenseMatrix& x, const std::vector<double>& left,
                      bool left_is_w, std::vector<double>& right) {
  const Index outer = left_is_w ? x.cols() : x.rows();
  const Index inner = left_is_w ? x.rows() : x.cols();
  right.assign(outer, 0.0);
  double error = 0.0;
  for (Index o = 0; o < outer; ++o) {
    double if_zero = 0.0;
    double if_one = 0.0;
    for (Index k = 0; k < inner; ++k) {
      const double v = left_is_w ? x(k, o) : x(o, k);
      if_zero += v;
      if_one += std::fabs(v - left[k]);
    }
    if (if_one < if_zero) {
      right[o] = 1.0;
      error += if_one;
    } else {
      error += if_zero;
    }
  }
  return error;
}

}  // namespace

void validate_sign_matrix(const DenseMatrix& m) {
  for (double e : m.data()) {
    if (e != 1.0 && e != -1.0) {
      throw InvalidArgument("sign matrix entries must be +1 or -1");
    }
  }
}

ReducedInstance encode(const DenseMatrix& m, std::int64_t d) {
  validate_sign_matrix(m);
  if (d < 0) throw InvalidArgument("budget D must be >= 0");
  ReducedInstance out;
  out.x = DenseMatrix(2 * m.rows(), 2 * m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) > 0.0) {
        out.x(2 * i, 2 * j) = 1.0;
        out.x(2 * i + 1, 2 * j + 1) = 1.0;
      } else {
        out.x(2 * i, 2 * j + 1) = 1.0;
        out.x(2 * i + 1, 2 * j) = 1.0;
      }
    }
  }
  out.budget = static_cast<std::int64_t>(m.rows()) * m.cols() + d;
  return out;
}

std::pair<std::vector<double>, std::vector<double>> embed_solution(
    const std::vector<double>& u, const std::vector<double>& v) {
  check_signs(u, "u");
  check_signs(v, "v");
  auto blocks = [](const std::vector<double>& a) {
    std::vector<double> out(2 * a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[2 * i + (a[i] > 0 ? 0 : 1)] = 1.0;
    return out;
  };
  return {blocks(u), blocks(v)};
}

std::pair<std::vector<double>, std::vector<double>> extract_solution(
    const std::vector<double>& w, const std::vector<double>& h) {
  if (w.size() % 2 != 0 || h.size() % 2 != 0) {
    throw InvalidArgument("extract_solution: lengths must be even");
  }
  auto diff = [](const std::vector<double>& a) {
    std::vector<double> out(a.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[2 * i] - a[2 * i + 1];
    return out;
  };
  return {diff(w), diff(h)};
}

double rank1_l1_error(const DenseMatrix& a, const std::vector<double>& left,
                      const std::vector<double>& right) {
  if (left.size() != static_cast<std::size_t>(a.rows()) ||
      right.size() != static_cast<std::size_t>(a.cols())) {
    throw InvalidArgument("rank1_l1_error: vector lengths do not match");
  }
  double e = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) e += std::fabs(a(i, j) - left[i] * right[j]);
  }
  return e;
}

BinaryRank1 best_binary_rank1(const DenseMatrix& x) {
  for (double e : x.data()) {
    if (e != 0.0 && e != 1.0) throw InvalidArgument("X must be binary");
  }
  const bool enumerate_w = x.rows() <= x.cols();
  const Index k = enumerate_w ? x.rows() : x.cols();
  if (k > 20) {
    throw InvalidArgument("best_binary_rank1: min(m, n) must be <= 20");
  }
  BinaryRank1 best;
  best.error = std::numeric_limits<double>::infinity();
  std::vector<double> left(k), right;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (Index b = 0; b < k; ++b) left[b] = ((mask >> b) & 1) ? 1.0 : 0.0;
    const double e = fit_other_side(x, left, enumerate_w, right);
    if (e < best.error) {
      best.error = e;
      best.w = enumerate_w ? left : right;
      best.h = enumerate_w ? right : left;
    }
  }
  return best;
}

}  // namespace wl1nmf
