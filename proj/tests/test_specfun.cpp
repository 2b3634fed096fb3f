#include "qdist/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace qdist::specfun;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

/* Brute-force Li_s for |w| < 1, independent of the library path. */
cd polylog_brute(int s, cd w, long terms)
{
	cd sum = 0.0, wn = 1.0;
	for (long n = 1; n <= terms; ++n) {
		wn *= w;
		sum += wn / std::pow(static_cast<double>(n), s);
	}
	return sum;
}

} // namespace

TEST_CASE("gamma values")
{
	CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-13));
	CHECK(gamma_real(0.5) ==
	      doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
	CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-13));
	for (double x : {0.2, 0.7, 1.3, 2.6, 7.5, 13.0})
		CHECK(gamma_real(x) ==
		      doctest::Approx(std::tgamma(x)).epsilon(1e-12));
	CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
	CHECK_THROWS_AS(gamma_real(-1.5), std::domain_error);
}

TEST_CASE("digamma values")
{
	CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-13));
	CHECK(digamma(0.5) ==
	      doctest::Approx(-euler_gamma - 2.0 * std::log(2.0)).epsilon(1e-13));
	CHECK(digamma(2.0) == doctest::Approx(1.0 - euler_gamma).epsilon(1e-13));
	/* psi(1/4) = -gamma - 3 log 2 - pi/2. */
	CHECK(digamma(0.25) ==
	      doctest::Approx(-euler_gamma - 3.0 * std::log(2.0) - pi / 2.0)
		      .epsilon(1e-13));
	CHECK_THROWS_AS(digamma(0.0), std::domain_error);
}

TEST_CASE("hurwitz zeta at s = 3")
{
	/* Direct summation oracle with a crude integral tail bound. */
	auto brute = [](double a) {
		double sum = 0.0;
		const long M = 4000;
		for (long n = 0; n < M; ++n)
			sum += 1.0 / std::pow(n + a, 3);
		sum += 1.0 / (2.0 * (M + a) * (M + a)); // integral tail
		return sum;
	};
	CHECK(hurwitz_zeta3(1.0) ==
	      doctest::Approx(1.2020569031595943).epsilon(1e-13));
	CHECK(hurwitz_zeta3(1.0) == doctest::Approx(brute(1.0)).epsilon(1e-9));
	CHECK(hurwitz_zeta3(0.5) ==
	      doctest::Approx(7.0 * zeta3()).epsilon(1e-13));
	CHECK(hurwitz_zeta3(1.0 / 3.0) ==
	      doctest::Approx(brute(1.0 / 3.0)).epsilon(1e-9));

	double prev = hurwitz_zeta3(0.05);
	for (double a = 0.1; a <= 1.0; a += 0.05) {
		double cur = hurwitz_zeta3(a);
		CHECK(cur < prev);
		prev = cur;
	}
	CHECK_THROWS_AS(hurwitz_zeta3(0.0), std::domain_error);
}

TEST_CASE("polylog special values")
{
	/* Alternating-series oracles: truncation error is below the first
	 * omitted term. */
	double li3_alt = 0.0;
	for (long n = 1; n <= 20000; ++n)
		li3_alt += (n % 2 ? -1.0 : 1.0) / (static_cast<double>(n) * n * n);
	CHECK(polylog(3, cd(-1.0, 0.0)).real() ==
	      doctest::Approx(li3_alt).epsilon(1e-11));
	CHECK(polylog(3, cd(-1.0, 0.0)).real() ==
	      doctest::Approx(-0.75 * zeta3()).epsilon(1e-12));
	CHECK(std::abs(polylog(3, cd(-1.0, 0.0)).imag()) < 1e-13);

	CHECK(polylog(2, cd(-1.0, 0.0)).real() ==
	      doctest::Approx(-pi * pi / 12.0).epsilon(1e-12));
}

TEST_CASE("polylog agrees with brute force inside the disk")
{
	std::mt19937 rng(2024);
	std::uniform_real_distribution<double> radius(0.55, 0.9);
	std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
	for (int s : {2, 3}) {
		for (int trial = 0; trial < 25; ++trial) {
			cd w = std::polar(radius(rng), angle(rng));
			cd brute = polylog_brute(s, w, 2000);
			CHECK(std::abs(polylog(s, w) - brute) < 1e-11);
		}
	}
}

TEST_CASE("lerch transcendent is the reindexed dilogarithm")
{
	for (int k = 1; k < 7; ++k) {
		cd w = std::polar(1.0, 2.0 * pi * k / 7.0);
		CHECK(std::abs(lerch_phi_2_1(w) * w - polylog(2, w)) < 1e-12);
	}
}

TEST_CASE("polylog domain")
{
	CHECK_THROWS_AS(polylog(2, cd(1.0, 0.0)), std::domain_error);
	CHECK_THROWS_AS(polylog(2, cd(1.5, 0.0)), std::domain_error);
	CHECK_THROWS_AS(polylog(4, cd(0.5, 0.0)), std::invalid_argument);
}

TEST_CASE("bernoulli numbers and polynomials")
{
	auto b = bernoulli_numbers(12);
	CHECK(b[0] == 1);
	CHECK(b[1] == mpq_class(-1, 2));
	CHECK(b[2] == mpq_class(1, 6));
	CHECK(b[3] == 0);
	CHECK(b[4] == mpq_class(-1, 30));
	CHECK(b[12] == mpq_class(-691, 2730));

	for (int n : {0, 1, 2, 5, 8})
		CHECK(bernoulli_poly(n, 0.0) ==
		      doctest::Approx(bernoulli_numbers(n)[n].get_d())
			      .epsilon(1e-13));
	/* B_2(x) = x^2 - x + 1/6. */
	CHECK(bernoulli_poly(2, 0.3) ==
	      doctest::Approx(0.09 - 0.3 + 1.0 / 6.0).epsilon(1e-13));
}

TEST_CASE("zeta'(-1) cross-checked by an independent route")
{
	/* log A = lim [sum_{k<=n} k log k - (n^2/2 + n/2 + 1/12) log n
	 *               + n^2/4], Richardson-extrapolated in 1/n^2, and
	 * zeta'(-1) = 1/12 - log A. The partial sums cancel ~n^2 log n
	 * of mass down to an O(1) limit, so they are taken in long double. */
	auto glaisher_partial = [](long n) {
		long double sum = 0.0L;
		for (long k = 2; k <= n; ++k)
			sum += static_cast<long double>(k) *
			       std::log(static_cast<long double>(k));
		long double nn = static_cast<long double>(n);
		sum -= (nn * nn / 2.0L + nn / 2.0L + 1.0L / 12.0L) * std::log(nn);
		sum += nn * nn / 4.0L;
		return sum;
	};
	long double a1 = glaisher_partial(2000);
	long double a2 = glaisher_partial(4000);
	double log_a = static_cast<double>((4.0L * a2 - a1) / 3.0L);
	double reference = 1.0 / 12.0 - log_a;

	CHECK(zeta_prime_minus_1() == doctest::Approx(reference).epsilon(1e-9));
	CHECK(zeta_prime_minus_1() < 0.0);
}
