#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace resilmax {

/// Worker cap: RESILMAX_THREADS when set to a positive integer, otherwise
/// hardware concurrency. Never less than 1. Read on every call so tests can
/// flip the variable between runs.
int worker_count();

/// Runs fn(begin, end, chunk_index) over contiguous chunks of [0, count) on
/// up to worker_count() threads. Chunk boundaries depend on the worker count,
/// so callers must fold per-chunk results with an order-insensitive rule
/// (total-order min/max, index-addressed writes) to stay deterministic.
void parallel_chunks(
    std::size_t count,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Evaluates fn(i) for every i in [0, count) and collects the results in
/// index order. Deterministic regardless of the worker count.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<R> out(count);
  parallel_chunks(count,
                  [&](std::size_t begin, std::size_t end, std::size_t) {
                    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
                  });
  return out;
}

}  // namespace resilmax
