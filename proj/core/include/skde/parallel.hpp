#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace skde {

//! Number of worker threads a value of `requested` resolves to (0 = auto).
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

//! Run body(i) for i in [0, count) on up to `threads` workers.
//!
//! Indices are partitioned into contiguous blocks, one block per worker.
//! Each body(i) must write only to state owned by index i; under that
//! contract the result is identical for every thread count.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  unsigned n_workers = resolve_threads(threads);
  if (n_workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (static_cast<std::size_t>(n_workers) > count)
    n_workers = static_cast<unsigned>(count);

  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const std::size_t chunk = (count + n_workers - 1) / n_workers;
  for (unsigned w = 0; w < n_workers; ++w) {
    const std::size_t begin = static_cast<std::size_t>(w) * chunk;
    const std::size_t end = begin + chunk < count ? begin + chunk : count;
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace skde
