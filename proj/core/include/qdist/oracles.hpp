#pragma once

#include "qdist/families.hpp"

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace qdist {
namespace oracles {

/* Enumeration guards keep the brute-force suite at desk scale; requests
 * beyond a guard raise capacity_error. */
struct Guards {
	int partitions = 80;
	int overpartitions = 40;
	int plane_partitions = 25;
};

/* Partition of n as a non-increasing list of positive parts. */
using Parts = std::vector<int>;

/* Calls fn once per partition of n (parts non-increasing). n = 0 yields
 * the single empty partition. */
void for_each_partition(int n, const std::function<void(const Parts&)>& fn,
			const Guards& guards = {});

/* Dyson rank: largest part minus number of parts; empty partition -> 0. */
int rank_of(const Parts& parts);

/* Andrews-Garvan crank: largest part when no ones are present, else
 * mu - omega with omega = #ones and mu = #parts exceeding omega. */
int crank_of(const Parts& parts);

struct Overpartition {
	Parts parts;
	std::vector<char> overlined; // parallel to parts, flag on first occurrence only
};

void for_each_overpartition(int n,
			    const std::function<void(const Overpartition&)>& fn,
			    const Guards& guards = {});

/* Plane partition as rows of non-increasing positive entries, column
 * monotone across consecutive rows. */
using PlaneRows = std::vector<std::vector<int>>;

void for_each_plane_partition(int n,
			      const std::function<void(const PlaneRows&)>& fn,
			      const Guards& guards = {});

/* Trace: sum of diagonal entries pi_{j,j}. */
int trace_of(const PlaneRows& rows);

/* p(n) by Euler's pentagonal-number recurrence; exact, cached. */
mpz_class pentagonal_p(int n);
std::vector<mpz_class> pentagonal_p_table(int n_max);

/* Number of partitions of 0..n_max into distinct parts (0/1 knapsack). */
std::vector<mpz_class> distinct_partition_counts(int n_max);

/* Crank counts mod b for each n <= n_max by enumeration. With `patched`
 * the n = 1 row is replaced by the product-side table
 * M(m,1) = [m = +-1] - [m = 0], which is what the crank generating
 * function expands to. */
std::vector<std::vector<mpz_class>> crank_mod_table(int b, int n_max,
						    bool patched,
						    const Guards& guards = {});

/* Exact count of weight-n objects with statistic congruent to a mod b,
 * by a route independent of the series engine: enumeration for rank,
 * crank and plane-partition trace; the patched-crank x distinct-parts
 * convolution for the residual crank. Only those four families are
 * supported. */
mpz_class count_statistic(Family family, int a, int b, int n,
			  const Guards& guards = {});

} // namespace oracles
} // namespace qdist
