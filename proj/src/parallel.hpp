/*
   Copyright 2026 The hullwalk Authors

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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hullwalk::detail {

/// Calls body(worker, i) for every i in [0, count) on `threads` workers.
/// Work is handed out in blocks; the first exception thrown is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body, std::size_t block = 16) {
  threads = std::max(1u, threads);
  if (threads == 1 || count <= block) {
    for (std::size_t i = 0; i < count; ++i) {
      body(0u, i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto work = [&](unsigned worker) {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(block);
        if (begin >= count) {
          return;
        }
        const std::size_t end = std::min(count, begin + block);
        for (std::size_t i = begin; i < end; ++i) {
          body(worker, i);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) {
        error = std::current_exception();
      }
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back(work, t);
  }
  for (auto &t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

/// Pairwise summation; the result depends only on the order of `values`.
template <class Range> double pairwise_sum(const Range &values, std::size_t begin, std::size_t end) {
  if (end - begin <= 32) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      s += values[i];
    }
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum(values, begin, mid) + pairwise_sum(values, mid, end);
}

} // namespace hullwalk::detail
