#ifndef EDGEREG_PARALLEL_HPP
#define EDGEREG_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "edgereg/config.hpp"

namespace edgereg {

// Runs fn(0..n-1) on up to thread_count() workers.  Callers own result
// placement (typically a pre-sized vector indexed by i), so the outcome is
// independent of scheduling.  The first exception wins and is rethrown
// after all workers stop.
template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
  size_t nt = static_cast<size_t>(thread_count());
  if (nt > n) nt = n;
  if (nt <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&] {
      while (!stop.load(std::memory_order_relaxed)) {
        size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
          }
          stop.store(true, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace edgereg

#endif
