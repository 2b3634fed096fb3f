#include "qdist/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qdist {

int resolve_thread_count(int requested)
{
	if (requested > 0) return requested;

	if (const char* env = std::getenv("QDIST_THREADS")) {
		int n = std::atoi(env);
		if (n > 0) return n;
	}

	unsigned hw = std::thread::hardware_concurrency();
	return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int threads,
		  const std::function<void(std::size_t)>& body)
{
	threads = resolve_thread_count(threads);
	std::size_t workers = std::min<std::size_t>(threads, count);

	if (workers <= 1) {
		for (std::size_t i = 0; i < count; ++i) body(i);
		return;
	}

	std::vector<std::thread> pool;
	pool.reserve(workers);

	std::size_t chunk = (count + workers - 1) / workers;
	for (std::size_t w = 0; w < workers; ++w) {
		std::size_t lo = w * chunk;
		std::size_t hi = std::min(count, lo + chunk);
		if (lo >= hi) break;
		pool.emplace_back([lo, hi, &body] {
			for (std::size_t i = lo; i < hi; ++i) body(i);
		});
	}
	for (auto& t : pool) t.join();
}

} // namespace qdist
