// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_PARALLEL_HPP
#define FFC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace ffc {

/// Worker count: FFC_THREADS if set to a positive integer, else the hardware
/// concurrency. Affects speed only.
inline unsigned thread_count() {
  if (const char* env = std::getenv("FFC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Evaluates fn(i) for i in [0, n) and returns the results in index order.
/// Work is claimed dynamically, so any exception from fn is rethrown after all
/// workers stop; the first one by index wins, which keeps failures
/// deterministic too.
template <class Fn>
auto parallel_map(std::size_t n, Fn&& fn, unsigned threads = thread_count())
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<R> out(n);
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::size_t err_index = n;
  std::exception_ptr err;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  if (err) std::rethrow_exception(err);
  return out;
}

/// Splits [0, n) into contiguous chunks, maps each, and folds the chunk
/// results left to right with combine. The partition depends only on n and
/// chunks, never on scheduling.
template <class T, class Fn, class Combine>
T parallel_reduce(std::size_t n, std::size_t chunks, T init, Fn&& chunk_fn, Combine&& combine) {
  chunks = std::max<std::size_t>(1, std::min(chunks, n));
  auto parts = parallel_map(chunks, [&](std::size_t c) {
    std::size_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
    return chunk_fn(lo, hi);
  });
  for (auto& p : parts) init = combine(std::move(init), std::move(p));
  return init;
}

}  // namespace ffc

#endif  // FFC_PARALLEL_HPP
