// Copyright (c) 2026 The unruh-qsl authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace unruh_qsl {

// Worker count for grid sweeps: hardware concurrency, capped by the
// UNRUH_QSL_THREADS environment variable when set.
inline unsigned sweep_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("UNRUH_QSL_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<long>(n, cap);
    } catch (const std::exception&) {
      // Unparsable cap: keep the hardware default.
    }
  }
  return n;
}

// Runs fn(i) for i in [0, n) across disjoint contiguous chunks, one thread
// each.  workers = 0 means sweep_thread_count().  Results must be written to
// per-index slots, so the outcome is independent of scheduling.  The first
// exception is rethrown.
template <typename Fn>
void parallel_for_index(std::size_t n, Fn&& fn, unsigned workers = 0) {
  if (workers == 0) workers = sweep_thread_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace unruh_qsl
