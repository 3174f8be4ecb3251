#ifndef STABLECOH_PARALLEL_HPP
#define STABLECOH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace stablecoh {

/* Worker count from STABLECOH_THREADS (0 or unset = hardware auto). */
std::size_t thread_budget();

/* Run fn(i) for i in [0, n).  Iterations must be independent; results land
 * in caller-preallocated slots, so output never depends on scheduling. */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace stablecoh

#endif
