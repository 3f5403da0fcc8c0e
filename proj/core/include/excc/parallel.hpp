#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace excc {

/// Worker count: EXCC_THREADS if set and positive, else the hardware count.
std::size_t worker_count();

/// Calls body(i) for i in [0, count), split over worker_count() threads.
/// Callers write results into per-index slots, so output never depends on
/// the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Pairwise (cascade) summation; reproducible for a fixed input order.
double pairwise_sum(std::span<const double> values);

}  // namespace excc
