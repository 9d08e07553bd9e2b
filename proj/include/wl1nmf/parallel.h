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

#ifndef WL1NMF_PARALLEL_H_
#define WL1NMF_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace wl1nmf {

// Splits [0, n) into `threads` contiguous chunks and calls
// fn(begin, end, worker) for each, worker in [0, threads). The partition
// depends only on (n, threads). Exceptions from workers are rethrown.
template <class Fn>
void parallel_for(long n, int threads, Fn&& fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max(1L, n))));
  if (threads == 1) {
    fn(0L, n, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  auto run = [&](int w) {
    const long begin = n * w / threads;
    const long end = n * (w + 1) / threads;
    try {
      fn(begin, end, w);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  for (int w = 1; w < threads; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace wl1nmf

#endif  // WL1NMF_PARALLEL_H_
