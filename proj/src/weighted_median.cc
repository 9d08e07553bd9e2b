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

#include "wl1nmf/weighted_median.h"

#include <algorithm>
#include <cmath>

#include "wl1nmf/common.h"

namespace wl1nmf {

std::optional<double> WeightedMedianWorkspace::solve(
    std::span<const double> ratios, std::span<const double> weights,
    double c) {
  points_.clear();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] > 0.0) points_.push_back({ratios[k], weights[k]});
  }
  if (c > 0.0) points_.push_back({0.0, c});
  if (points_.empty()) return std::nullopt;

  std::sort(points_.begin(), points_.end(),
            [](const Breakpoint& a, const Breakpoint& b) {
              return a.at < b.at || (a.at == b.at && a.weight < b.weight);
            });

  // Merge equal breakpoints in place and total the weight in sorted order,
  // so the final cumulative sum below equals `total` exactly.
  std::size_t groups = 0;
  double total = 0.0;
  for (std::size_t k = 0; k < points_.size();) {
    const double at = points_[k].at;
    double w = 0.0;
    for (; k < points_.size() && points_[k].at == at; ++k) {
      w += points_[k].weight;
    }
    points_[groups++] = {at, w};
    total += w;
  }

  const double half = total / 2.0;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < groups; ++k) {
    cumulative += points_[k].weight;
    if (cumulative >= half) {
      return points_[k].at > 0.0 ? points_[k].at : 0.0;
    }
  }
  // Unreachable: the last cumulative sum equals total >= half.
  return points_[groups - 1].at > 0.0 ? points_[groups - 1].at : 0.0;
}

namespace {

void validate(const BreakpointProblem& p) {
  if (p.x.size() != p.y.size()) {
    throw InvalidArgument("breakpoint problem: x and y lengths differ");
  }
  for (double y : p.y) {
    if (!(y >= 0.0)) throw InvalidArgument("breakpoint problem: negative weight");
  }
  if (!(p.c >= 0.0)) {
    throw InvalidArgument("breakpoint problem: negative zero-weight term c");
  }
}

}  // namespace

std::optional<double> constrained_weighted_median(const BreakpointProblem& p) {
  validate(p);
  std::vector<double> ratios(p.x.size());
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    ratios[k] = p.y[k] > 0.0 ? p.x[k] / p.y[k] : 0.0;
  }
  WeightedMedianWorkspace ws;
  return ws.solve(ratios, p.y, p.c);
}

double lad_objective(const BreakpointProblem& p, double alpha) {
  validate(p);
  if (!(alpha >= 0.0)) throw InvalidArgument("lad_objective: alpha < 0");
  double f = p.c * alpha;
  for (std::size_t k = 0; k < p.x.size(); ++k) {
    f += std::fabs(p.x[k] - alpha * p.y[k]);
  }
  return f;
}

std::optional<double> nnls_scalar(std::span<const double> x,
                                  std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("nnls_scalar: x and y lengths differ");
  }
  double xy = 0.0;
  double yy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    xy += x[k] * y[k];
    yy += y[k] * y[k];
  }
  if (yy == 0.0) return std::nullopt;
  return std::max(0.0, xy / yy);
}

}  // namespace wl1nmf
