#pragma once

#include <cstddef>
#include <functional>

namespace qdist {

/* Thread count resolution order: explicit argument if > 0, then the
 * QDIST_THREADS environment variable, then hardware concurrency. */
int resolve_thread_count(int requested = 0);

/* Runs body(i) for i in [0, count) on up to `threads` workers using a
 * static block partition. Callers must write results to disjoint slots;
 * under that contract the output is identical for any thread count. */
void parallel_for(std::size_t count, int threads,
		  const std::function<void(std::size_t)>& body);

} // namespace qdist
