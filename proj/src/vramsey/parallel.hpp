#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vramsey {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results are stored
// by index, so the output does not depend on scheduling.
template <class T, class Fn>
std::vector<T> run_trials(std::uint64_t count, unsigned jobs, Fn fn) {
  std::vector<T> results(count);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::uint64_t i = next++; i < count; i = next++) {
          try {
            results[i] = fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace vramsey
