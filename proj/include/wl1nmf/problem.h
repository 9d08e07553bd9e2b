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

#ifndef WL1NMF_PROBLEM_H_
#define WL1NMF_PROBLEM_H_

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "wl1nmf/matrix.h"

namespace wl1nmf {

// Factors ~ Uniform(0,1), no refinement.
struct RandomInit {};
// Factors ~ Uniform(0,1) refined by `sweeps` HALS sweeps.
struct HalsInit {
  int sweeps = 10;
};
struct ExplicitInit {
  FactorPair factors;
};
using InitPolicy = std::variant<RandomInit, HalsInit, ExplicitInit>;

struct StopRule {
  // Stop when |relerr_k - relerr_{k-1}| < tolerance, relerr = objective/||X||_1.
  double tolerance = 1e-6;
  int max_sweeps = 1000;
  // Checked between sweeps; warm-start time is not counted.
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  // Run exactly max_sweeps (subject to the time limit), ignoring tolerance.
  bool fixed_sweeps = false;
};

struct WL1Problem {
  SparseNonnegMatrix x;
  Index rank = 1;
  double lambda = 1.0;
  InitPolicy init = HalsInit{};
  StopRule stop;
  std::uint64_t seed = 0;
  int threads = 1;

  // Throws InvalidArgument on violated invariants.
  void validate() const;
};

struct SweepRecord {
  int sweep = 0;
  double objective = 0.0;
  double seconds = 0.0;  // since the start of the main phase
  double w_sparsity = 0.0;
  double h_sparsity = 0.0;
};

enum class StopReason { kNone, kConverged, kMaxSweeps, kTimeLimit, kEmptyInput };

const char* to_string(StopReason r);

struct SolveTrace {
  std::vector<SweepRecord> sweeps;
  double initial_objective = 0.0;
  // Warm-start cost, excluded from the time budget.
  double init_seconds = 0.0;
  StopReason stop_reason = StopReason::kNone;
  std::vector<std::string> warnings;
};

struct SolveResult {
  FactorPair factors;
  SolveTrace trace;
};

}  // namespace wl1nmf

#endif  // WL1NMF_PROBLEM_H_
