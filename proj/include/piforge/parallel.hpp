// Worker pool configuration and ordered fan-out helpers.

#pragma once

#include "piforge/interval.hpp"

#include <cstddef>
#include <functional>

namespace piforge {

/// Process-wide worker count used by summation and grid verification.
/// Defaults to the hardware concurrency (at least 1).
unsigned worker_count();
void set_worker_count(unsigned workers);

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
/// executed exactly once; callers write results into per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers = worker_count());

/// Fixed chunk length for interval summation.
inline constexpr std::size_t kSumChunk = 4096;

/// sum_{n=first}^{last} term(n), accumulated left to right inside fixed
/// 4096-term chunks, then chunk totals reduced in ascending order. The result
/// is bitwise independent of the worker count. Empty range gives [0, 0].
CertifiedReal chunked_sum(unsigned long first, unsigned long last,
                          const std::function<CertifiedReal(unsigned long)>& term,
                          const PrecisionContext& ctx);

/// A truncated series: the partial sum and an enclosure of the omitted tail.
struct SeriesSum {
  CertifiedReal partial;
  CertifiedReal tail;

  /// Interval guaranteed to contain the full infinite sum.
  CertifiedReal enclosure() const { return partial + tail; }
  /// Point estimate of the tail (midpoint of its enclosure).
  double tail_estimate() const { return tail.mid_double(); }
};

}  // namespace piforge
