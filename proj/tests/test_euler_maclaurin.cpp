#include "qdist/errors.hpp"
#include "qdist/euler_maclaurin.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace qdist;
using cd = std::complex<double>;

TEST_CASE("laurent coefficients of F")
{
	auto c = em::c_coefficients(7);
	CHECK(em::c_minus3 == 1.0);
	CHECK(em::c_minus2 == 0.0);
	CHECK(em::c_minus1 == doctest::Approx(-1.0 / 12.0));
	CHECK(c[0] == 0.0);
	CHECK(c[1] == doctest::Approx(1.0 / 240.0).epsilon(1e-14));
	CHECK(c[2] == 0.0);
	CHECK(c[3] == doctest::Approx(-1.0 / 6048.0).epsilon(1e-14));
}

TEST_CASE("F series and closed form agree where both are stable")
{
	for (double u : {0.31, 0.42, 0.49}) {
		cd series = em::f_value(cd(u, 0.0));
		double em1 = -std::expm1(-u);
		double direct = std::exp(-u) / (u * em1 * em1);
		CHECK(std::abs(series - direct) < 1e-10 * std::abs(direct));
	}
	for (cd u : {cd(0.3, 0.2), cd(0.45, -0.1)}) {
		cd series = em::f_value(u);
		cd em1 = 1.0 - std::exp(-u);
		cd direct = std::exp(-u) / (u * em1 * em1);
		CHECK(std::abs(series - direct) < 1e-10 * std::abs(direct));
	}
}

TEST_CASE("I* is reproducible across quadrature refinements")
{
	double coarse = em::i_star_f1_quadrature(1);
	double mid = em::i_star_f1_quadrature(2);
	double fine = em::i_star_f1_quadrature(4);
	CHECK(std::abs(coarse - fine) < 1e-9);
	CHECK(std::abs(mid - fine) < 1e-10);
	CHECK(em::i_star_f1() == mid);
}

TEST_CASE("euler-maclaurin matches the direct lattice sum")
{
	/* Asymptotic in z: at moderate x the two routes agree to roughly
	 * C x^K, far above double noise. */
	for (int b : {2, 3, 5}) {
		for (int j = 1; j <= b; ++j) {
			cd z(0.3, 0.1);
			cd direct = em::fsum_direct(j, b, z);
			cd approx = em::em_fsum(j, b, z, 8);
			CHECK(std::abs(direct - approx) <
			      1e-6 * std::abs(direct));
		}
	}
}

TEST_CASE("error contracts as z shrinks on a ray")
{
	const int j = 1, b = 3, K = 5;
	double prev = 1e9;
	for (double x : {0.5, 0.25, 0.125}) {
		cd z(x, 0.5 * x);
		double err = std::abs(em::em_fsum(j, b, z, K) -
				      em::fsum_direct(j, b, z));
		CHECK(err < prev);
		prev = err;
	}
}

TEST_CASE("preconditions")
{
	CHECK_THROWS_AS(em::em_fsum(0, 2, cd(0.1, 0.0), 4),
			std::invalid_argument);
	CHECK_THROWS_AS(em::em_fsum(1, 2, cd(-0.1, 0.0), 4), std::domain_error);
	CHECK_THROWS_AS(em::em_fsum(1, 2, cd(0.1, 0.0), 25),
			std::invalid_argument);
	CHECK_THROWS_AS(em::fsum_direct(1, 2, cd(1e-9, 0.0)), capacity_error);
}
