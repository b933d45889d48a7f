#pragma once

#include <cstdint>
#include <future>
#include <utility>
#include <vector>

#include "medtri/core.hpp"

namespace medtri {

// Visits every integer triple 1 <= a <= b <= c with c in [c_lo, c_hi]
// and a + b > c, exactly once, ascending in (c, b, a).  The inner
// bound a >= c - b + 1 bakes the triangle inequality into the loop.
template <typename F>
void visit_triangles(std::int64_t c_lo, std::int64_t c_hi, F&& fn) {
  for (std::int64_t c = c_lo; c <= c_hi; ++c)
    for (std::int64_t b = c / 2 + 1; b <= c; ++b)
      for (std::int64_t a = c - b + 1; a <= b; ++a) fn(a, b, c);
}

// Contiguous c-ranges with roughly equal triangle counts (weight c^2).
std::vector<std::pair<std::int64_t, std::int64_t>> partition_side_ranges(std::int64_t max_side,
                                                                         int workers);

// Runs fn(c_lo, c_hi) over each chunk, concurrently when workers > 1,
// and returns the per-chunk results in chunk order.  Chunks are
// contiguous and ordered, so concatenating the results reproduces the
// single-worker stream exactly.
template <typename Fn>
auto run_chunked(std::int64_t max_side, int workers, Fn fn)
    -> std::vector<decltype(fn(std::int64_t{}, std::int64_t{}))> {
  using R = decltype(fn(std::int64_t{}, std::int64_t{}));
  const auto ranges = partition_side_ranges(max_side, workers);
  std::vector<R> results;
  results.reserve(ranges.size());
  if (ranges.size() <= 1) {
    for (const auto& [lo, hi] : ranges) results.push_back(fn(lo, hi));
    return results;
  }
  std::vector<std::future<R>> futures;
  futures.reserve(ranges.size());
  for (const auto& [lo, hi] : ranges)
    futures.push_back(std::async(std::launch::async, fn, lo, hi));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace medtri
