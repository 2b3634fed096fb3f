#include "qdist/errors.hpp"
#include "qdist/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

using namespace qdist;
using namespace qdist::oracles;

namespace {

long count_partitions(int n)
{
	long count = 0;
	for_each_partition(n, [&](const Parts&) { ++count; });
	return count;
}

} // namespace

TEST_CASE("partition enumeration counts")
{
	CHECK(count_partitions(0) == 1);
	CHECK(count_partitions(4) == 5);
	CHECK(count_partitions(10) == 42);
	CHECK_THROWS_AS(count_partitions(81), capacity_error);
}

TEST_CASE("rank and crank values")
{
	CHECK(rank_of({4}) == 3);
	CHECK(rank_of({1, 1, 1, 1}) == -3);
	CHECK(rank_of({}) == 0);

	CHECK(crank_of({1}) == -1);	// omega = 1, mu = 0
	CHECK(crank_of({3, 2}) == 3);	// no ones: largest part
	CHECK(crank_of({2, 1, 1}) == -2); // omega = 2, mu = 0
	CHECK(crank_of({}) == 0);

	std::vector<long> crank_bins(5, 0);
	for_each_partition(4, [&](const Parts& parts) {
		crank_bins[((crank_of(parts) % 5) + 5) % 5] += 1;
	});
	CHECK(crank_bins == std::vector<long>{1, 1, 1, 1, 1});
}

TEST_CASE("plane partitions of 3 and their traces")
{
	std::vector<int> traces;
	for_each_plane_partition(3, [&](const PlaneRows& rows) {
		traces.push_back(trace_of(rows));
	});
	std::sort(traces.begin(), traces.end());
	CHECK(traces == std::vector<int>{1, 1, 1, 2, 2, 3});

	int even = 0, odd = 0;
	for (int t : traces) (t % 2 == 0 ? even : odd) += 1;
	CHECK(even == 2);
	CHECK(odd == 4);
}

TEST_CASE("plane partition counts follow MacMahon")
{
	const long expected[] = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
	for (int n = 0; n <= 10; ++n) {
		long count = 0;
		for_each_plane_partition(n, [&](const PlaneRows&) { ++count; });
		CHECK(count == expected[n]);
	}
	CHECK_THROWS_AS(
		for_each_plane_partition(26, [](const PlaneRows&) {}),
		capacity_error);
}

TEST_CASE("pentagonal recurrence against direct enumeration")
{
	CHECK(pentagonal_p(0) == 1);
	CHECK(pentagonal_p(4) == 5);
	CHECK(pentagonal_p(5) == 7);
	CHECK(pentagonal_p(100) == 190569292);
	for (int n = 0; n <= 40; ++n)
		CHECK(pentagonal_p(n) == count_partitions(n));
}

TEST_CASE("distinct part counts")
{
	auto d = distinct_partition_counts(10);
	const long expected[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
	for (int n = 0; n <= 10; ++n) CHECK(d[n] == expected[n]);
}

TEST_CASE("overpartition enumeration flags first occurrences only")
{
	for (int n = 0; n <= 8; ++n) {
		long count = 0;
		for_each_overpartition(n, [&](const Overpartition& over) {
			++count;
			REQUIRE(over.parts.size() == over.overlined.size());
			for (std::size_t i = 1; i < over.parts.size(); ++i)
				if (over.parts[i] == over.parts[i - 1])
					REQUIRE(over.overlined[i] == 0);
		});
		/* Overpartition counts 1, 2, 4, 8, 14, 24, 40, 64, 100. */
		const long expected[] = {1, 2, 4, 8, 14, 24, 40, 64, 100};
		CHECK(count == expected[n]);
	}
}

TEST_CASE("count_statistic examples")
{
	CHECK(count_statistic(Family::pp_trace, 0, 2, 3) == 2);
	CHECK(count_statistic(Family::pp_trace, 1, 2, 3) == 4);
	for (int a = 0; a < 5; ++a) {
		CHECK(count_statistic(Family::rank, a, 5, 4) == 1);
		CHECK(count_statistic(Family::crank, a, 5, 4) == 1);
	}
	CHECK_THROWS_AS(count_statistic(Family::betti_x1, 0, 2, 3),
			std::invalid_argument);
	CHECK_THROWS_AS(count_statistic(Family::rank, 0, 2, 81), capacity_error);
}

TEST_CASE("residual crank convolution totals match overpartition counts")
{
	for (int n = 0; n <= 10; ++n) {
		long total_enumerated = 0;
		for_each_overpartition(n, [&](const Overpartition&) {
			++total_enumerated;
		});
		mpz_class total_conv = 0;
		for (int a = 0; a < 3; ++a)
			total_conv += count_statistic(Family::residual_crank, a, 3, n);
		CHECK(total_conv == total_enumerated);
	}
}

TEST_CASE("patched crank table")
{
	auto raw = crank_mod_table(5, 2, /*patched=*/false);
	auto patched = crank_mod_table(5, 2, /*patched=*/true);
	/* Enumerated: crank((1)) = -1. Product side: t + t^-1 - 1. */
	CHECK(raw[1][4] == 1);
	CHECK(raw[1][0] == 0);
	CHECK(patched[1][0] == -1);
	CHECK(patched[1][1] == 1);
	CHECK(patched[1][4] == 1);
	CHECK(raw[2] == patched[2]);
}
