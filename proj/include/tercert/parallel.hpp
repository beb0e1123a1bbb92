#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "tercert/combinatorics.hpp"

namespace tercert {

/// Visits the r-subsets of {0..n-1} in lexicographic order, index by index.
/// With `workers` > 1 the subsets are dealt round-robin to threads; `visit`
/// gets (lexicographic index, subset, worker id) and returns false to stop
/// that worker. Callers must reduce their per-worker results by index so the
/// outcome does not depend on scheduling.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t r, unsigned workers, Visit&& visit) {
  if (workers <= 1) {
    std::uint64_t idx = 0;
    for (Combinations c(n, r); !c.done(); c.next(), ++idx)
      if (!visit(idx, c.current(), 0u)) return;
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        std::uint64_t idx = 0;
        for (Combinations c(n, r); !c.done(); c.next(), ++idx) {
          if (idx % workers != w) continue;
          if (!visit(idx, c.current(), w)) return;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tercert
