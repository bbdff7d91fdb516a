#pragma once

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace graflow {

enum class ExecutionMode { Sequential, ParallelSync, ParallelAsync };

inline const char* to_string(ExecutionMode m) {
  switch (m) {
    case ExecutionMode::Sequential: return "seq";
    case ExecutionMode::ParallelSync: return "par";
    case ExecutionMode::ParallelAsync: return "par-nosync";
  }
  return "?";
}

/// Selects how an operator executes: in the invoking thread, on worker
/// threads with a barrier on return, or on workers with no barriers at all.
struct ExecutionPolicy {
  ExecutionMode mode = ExecutionMode::Sequential;
  std::size_t worker_count = 1;

  static ExecutionPolicy sequential() { return {ExecutionMode::Sequential, 1}; }
  static ExecutionPolicy parallel(std::size_t workers = default_workers()) {
    return {ExecutionMode::ParallelSync, workers};
  }
  static ExecutionPolicy async(std::size_t workers = default_workers()) {
    return {ExecutionMode::ParallelAsync, workers};
  }

  static std::size_t default_workers() {
    std::size_t n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
  }

  void validate() const {
    if (mode != ExecutionMode::Sequential && worker_count < 1)
      throw std::invalid_argument("execution policy: worker_count must be >= 1");
  }
};

namespace detail {

/// Splits [0, count) into even static chunks and runs fn(worker, lo, hi) on
/// each, sequentially or on worker threads joined before return. Worker
/// exceptions are rethrown on the invoking thread.
template <typename Fn>
void run_chunked(const ExecutionPolicy& policy, std::size_t count, Fn&& fn) {
  policy.validate();
  if (count == 0) return;
  std::size_t workers =
      policy.mode == ExecutionMode::Sequential ? 1 : policy.worker_count;
  if (workers > count) workers = count;

  if (workers == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }

  std::size_t chunk = count / workers;
  std::size_t rem = count % workers;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  std::size_t lo = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t hi = lo + chunk + (w < rem ? 1 : 0);
    threads.emplace_back([&, w, lo, hi] {
      try {
        fn(w, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    lo = hi;
  }
  for (auto& t : threads) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace detail
}  // namespace graflow
