#include "qdist/euler_maclaurin.hpp"
#include "qdist/qproducts.hpp"
#include "qdist/specfun.hpp"

#include <benchmark/benchmark.h>

#include <complex>

using namespace qdist;
using cd = std::complex<double>;

namespace {

void BM_Polylog(benchmark::State& state)
{
	cd w = std::polar(1.0, 2.0 * 3.141592653589793 / 7.0);
	for (auto _ : state)
		benchmark::DoNotOptimize(specfun::polylog(3, w));
}
BENCHMARK(BM_Polylog);

void BM_HurwitzZeta3(benchmark::State& state)
{
	for (auto _ : state)
		benchmark::DoNotOptimize(specfun::hurwitz_zeta3(1.0 / 7.0));
}
BENCHMARK(BM_HurwitzZeta3);

void BM_EmFsum(benchmark::State& state)
{
	cd z(0.1, 0.02);
	for (auto _ : state)
		benchmark::DoNotOptimize(em::em_fsum(1, 3, z, 8));
}
BENCHMARK(BM_EmFsum);

void BM_FsumDirect(benchmark::State& state)
{
	cd z(0.1, 0.02);
	for (auto _ : state)
		benchmark::DoNotOptimize(em::fsum_direct(1, 3, z));
}
BENCHMARK(BM_FsumDirect);

void BM_PochhammerInf(benchmark::State& state)
{
	double x = 1.0 / static_cast<double>(state.range(0));
	cd q = std::exp(-cd(x, 0.3 * x));
	for (auto _ : state)
		benchmark::DoNotOptimize(qp::pochhammer_inf(q));
}
BENCHMARK(BM_PochhammerInf)->Arg(10)->Arg(40);

} // namespace
