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

// One-dimensional nonnegative least-absolute-deviation problems
//
//   min_{alpha >= 0}  sum_s |x_s - alpha * y_s| + c * alpha,   y >= 0, c >= 0,
//
// solved by the constrained weighted median. Terms with y_s = 0 are
// constants and are ignored. The c term behaves like one more breakpoint at
// 0 with weight c.
//
// Selection rule: breakpoints x_s / y_s are sorted (ties ordered by weight,
// so the result does not depend on input order), equal breakpoints are
// merged by summing their weights, and the answer is max(0, S_k) for the
// first merged breakpoint S_k whose cumulative weight reaches half of the
// total weight (compared with >=, no epsilon).

#ifndef WL1NMF_WEIGHTED_MEDIAN_H_
#define WL1NMF_WEIGHTED_MEDIAN_H_

#include <optional>
#include <span>
#include <vector>

namespace wl1nmf {

struct BreakpointProblem {
  std::span<const double> x;  // numerators, any sign
  std::span<const double> y;  // weights, >= 0
  double c = 0.0;             // extra weight at breakpoint 0, >= 0
};

// Reusable scratch space; one per thread.
class WeightedMedianWorkspace {
 public:
  // Solves the problem given precomputed breakpoints ratios[k] = x[k]/y[k].
  // Entries whose weight is not > 0 are skipped (their ratio may be inf or
  // NaN). Returns nullopt when no weight is positive and c = 0: every
  // alpha >= 0 is then optimal and the caller decides.
  std::optional<double> solve(std::span<const double> ratios,
                              std::span<const double> weights, double c);

 private:
  struct Breakpoint {
    double at;
    double weight;
  };
  std::vector<Breakpoint> points_;
};

// Validating entry point. Throws InvalidArgument if lengths differ, some
// y_s < 0, or c < 0.
std::optional<double> constrained_weighted_median(const BreakpointProblem& p);

// sum_s |x_s - alpha y_s| + c alpha. Throws InvalidArgument if alpha < 0.
double lad_objective(const BreakpointProblem& p, double alpha);

// max(0, x'y / ||y||^2); nullopt when y = 0.
std::optional<double> nnls_scalar(std::span<const double> x,
                                  std::span<const double> y);

}  // namespace wl1nmf

#endif  // WL1NMF_WEIGHTED_MEDIAN_H_
