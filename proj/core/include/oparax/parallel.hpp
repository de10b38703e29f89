#ifndef OPARAX_PARALLEL_HPP
#define OPARAX_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace oparax {

// Runs fn(i) for i in [0, count) on up to `threads` workers with a static
// block partition. No shared reductions: callers write to disjoint slots, so
// results are bit-identical for any thread count. threads <= 1 runs inline.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace oparax

#endif
