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

#include "wl1nmf/problem.h"

namespace wl1nmf {

void WL1Problem::validate() const {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InvalidArgument("lambda must lie in [0, 1]");
  }
  if (!(stop.tolerance > 0.0)) throw InvalidArgument("tolerance must be > 0");
  if (stop.max_sweeps < 0) throw InvalidArgument("max sweeps must be >= 0");
  if (!(stop.time_limit_seconds > 0.0)) {
    throw InvalidArgument("time limit must be > 0");
  }
  if (threads < 1) throw InvalidArgument("threads must be >= 1");
  if (const auto* h = std::get_if<HalsInit>(&init); h && h->sweeps < 0) {
    throw InvalidArgument("HALS warm-start sweeps must be >= 0");
  }
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::kNone: return "none";
    case StopReason::kConverged: return "converged";
    case StopReason::kMaxSweeps: return "max-sweeps";
    case StopReason::kTimeLimit: return "time-limit";
    case StopReason::kEmptyInput: return "empty-input";
  }
  return "unknown";
}

}  // namespace wl1nmf
