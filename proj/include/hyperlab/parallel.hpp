/*
   Copyright 2026 The hyperlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef HYPERLAB_PARALLEL_HPP
#define HYPERLAB_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hyperlab {

/// Worker bound from HYPERLAB_THREADS, defaulting to the hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("HYPERLAB_THREADS"); env != nullptr && *env != '\0') {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous chunks, runs fn(begin, end) on each and returns the results in chunk order,
/// so the combined output is independent of scheduling.
template <class R, class Fn>
std::vector<R> map_chunks(std::size_t n, Fn fn, std::size_t min_chunk = 1) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_chunk)));
  if (workers <= 1) return {fn(std::size_t{0}, n)};
  std::vector<R> out(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * step);
    const std::size_t end = std::min(n, begin + step);
    threads.emplace_back([&out, &fn, w, begin, end] { out[w] = fn(begin, end); });
  }
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace hyperlab

#endif  // HYPERLAB_PARALLEL_HPP
