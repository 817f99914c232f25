#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tcode {

/// 0 means "use available parallelism".
[[nodiscard]] inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers, handing out indices
/// dynamically. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

/// Runs fn(i) -> std::optional<T> for i in [0, count) and returns the value for the smallest i
/// that produced one. Indices above an already found hit are skipped, so the answer does not
/// depend on scheduling.
template <class T, class Fn>
std::optional<T> first_hit(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<std::optional<T>> found(count);
  std::atomic<std::size_t> best{count};
  parallel_for(count, threads, [&](std::size_t i) {
    if (i > best.load()) return;
    found[i] = fn(i);
    if (found[i]) {
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  });
  const std::size_t b = best.load();
  if (b == count) return std::nullopt;
  return found[b];
}

}  // namespace tcode
