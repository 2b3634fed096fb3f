#include "qdist/families.hpp"
#include "qdist/oracles.hpp"
#include "qdist/residue_series.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qdist;

namespace {

ResidueClassSeries random_series(int modulus, int truncation, unsigned seed)
{
	std::mt19937 rng(seed);
	std::uniform_int_distribution<int> dist(-9, 9);
	ResidueClassSeries s(modulus, truncation);
	for (int n = 0; n <= truncation; ++n)
		for (int r = 0; r < modulus; ++r)
			s.coefficient(n, r) = dist(rng);
	return s;
}

void BM_SeriesMul(benchmark::State& state)
{
	const int b = 5, N = static_cast<int>(state.range(0));
	auto a = random_series(b, N, 1);
	auto c = random_series(b, N, 2);
	for (auto _ : state) benchmark::DoNotOptimize(a * c);
	state.SetComplexityN(N);
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_FamilyExpand(benchmark::State& state, Family family)
{
	const int N = static_cast<int>(state.range(0));
	FamilySpec spec{family, 5, 2};
	for (auto _ : state)
		benchmark::DoNotOptimize(family_series(spec, N));
}
BENCHMARK_CAPTURE(BM_FamilyExpand, crank, Family::crank)
	->Arg(128)->Arg(256)->Arg(512);
BENCHMARK_CAPTURE(BM_FamilyExpand, rank, Family::rank)
	->Arg(128)->Arg(256)->Arg(512);
BENCHMARK_CAPTURE(BM_FamilyExpand, pp_trace, Family::pp_trace)
	->Arg(128)->Arg(256)->Arg(512);
BENCHMARK_CAPTURE(BM_FamilyExpand, goettsche, Family::goettsche_cells)
	->Arg(128)->Arg(256)->Arg(512);

void BM_DistinctPartitionCounts(benchmark::State& state)
{
	const int N = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(oracles::distinct_partition_counts(N));
}
BENCHMARK(BM_DistinctPartitionCounts)->Arg(500)->Arg(2000);

} // namespace

BENCHMARK_MAIN();
