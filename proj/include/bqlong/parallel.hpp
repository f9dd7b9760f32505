#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace bqlong {

/// Worker count used by the parallel entry points. 0 means one per hardware
/// thread.
struct ParallelOptions {
  unsigned threads = 1;

  unsigned resolved(std::size_t work_items) const {
    unsigned t = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(1, work_items)));
  }
};

/// Calls `fn(i)` for every i in [0, count). Indices are dealt round-robin to
/// workers; `fn` must only write to state owned by index i.
template <class Fn>
void parallel_for(std::size_t count, ParallelOptions options, Fn&& fn) {
  const unsigned workers = options.resolved(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Returns the witness produced by the smallest index i for which `fn(i)`
/// returns a value. The answer does not depend on the worker count.
template <class Witness, class Fn>
std::optional<Witness> first_failure(std::size_t count, ParallelOptions options, Fn&& fn) {
  const unsigned workers = options.resolved(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto w = fn(i)) return w;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<Witness>> found(count);
  parallel_for(count, options, [&](std::size_t i) {
    if (i > best.load(std::memory_order_relaxed)) return;
    if (auto w = fn(i)) {
      found[i] = std::move(w);
      std::size_t current = best.load();
      while (i < current && !best.compare_exchange_weak(current, i)) {
      }
    }
  });
  std::size_t b = best.load();
  if (b == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return found[b];
}

}  // namespace bqlong
