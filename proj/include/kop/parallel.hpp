#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace kop {

/// Worker count for grid loops: the KOP_THREADS environment variable when
/// set, else 1 (serial). Read once per process.
int grid_thread_count();

/// Evaluate fn(0..n-1) with each index writing its own output slot. The
/// strided schedule never shares a reduction, so results are bit-identical
/// for every thread count.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(grid_thread_count(), std::max(n, 1));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([w, n, workers, &fn] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace kop
