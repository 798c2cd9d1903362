#ifndef WULFF_PARALLEL_HPP
#define WULFF_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <span>

namespace wulff {

/// Worker count: hardware concurrency, capped by the WULFF_TENSION_THREADS
/// environment variable when set. Always >= 1.
int worker_count();

/// Runs fn(i) for i in [0, n). Work is split into contiguous blocks across
/// workers; each index must write only to its own output slot, so the result
/// is identical for any worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

/// Sum with a fixed binary reduction tree over the input order. The result
/// depends only on the contents of v, never on how the values were produced
/// or how many threads filled them.
double pairwise_sum(std::span<const double> v);

}  // namespace wulff

#endif
