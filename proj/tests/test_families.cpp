#include "qdist/families.hpp"
#include "qdist/oracles.hpp"

#include <doctest.h>

#include <vector>

using namespace qdist;

TEST_CASE("pp-trace mod 2 reproduces the classical traces")
{
	FamilySpec spec{Family::pp_trace, 2};
	auto s = family_series(spec, 5);
	CHECK(s.coefficient(3, 0) == 2);
	CHECK(s.coefficient(3, 1) == 4);

	const long totals[] = {1, 1, 3, 6, 13, 24};
	for (int n = 0; n <= 5; ++n) CHECK(s.row_sum(n) == totals[n]);
}

TEST_CASE("crank and rank mod 5 split p(4) evenly")
{
	for (Family family : {Family::crank, Family::rank}) {
		auto s = family_series({family, 5}, 4);
		for (int a = 0; a < 5; ++a) CHECK(s.coefficient(4, a) == 1);
	}
}

TEST_CASE("crank n = 1 row is the product anomaly")
{
	auto s = family_series({Family::crank, 5}, 2);
	CHECK(s.coefficient(1, 0) == -1);
	CHECK(s.coefficient(1, 1) == 1);
	CHECK(s.coefficient(1, 4) == 1);
	CHECK(s.row_sum(1) == 1);
}

TEST_CASE("constant terms")
{
	std::vector<FamilySpec> specs = {
		{Family::rank, 5},     {Family::crank, 5},
		{Family::residual_crank, 5}, {Family::pp_trace, 5},
		{Family::betti_x3, 5}, {Family::betti_x4, 5, 2},
		{Family::goettsche_cells, 5},
	};
	for (const auto& spec : specs) {
		auto s = family_series(spec, 2);
		CHECK(s.coefficient(0, 0) == 1);
		for (int r = 1; r < 5; ++r) CHECK(s.coefficient(0, r) == 0);
	}

	/* X1 and X2 open with the Poincare polynomial 1 + t^2. */
	for (Family family : {Family::betti_x1, Family::betti_x2}) {
		auto s = family_series({family, 5}, 2);
		CHECK(s.coefficient(0, 0) == 1);
		CHECK(s.coefficient(0, 2) == 1);
		CHECK(s.coefficient(0, 1) == 0);
		CHECK(s.coefficient(0, 3) == 0);
		CHECK(s.coefficient(0, 4) == 0);
	}
}

TEST_CASE("goettsche cells mod 3 at n = 5 sum to p(5)")
{
	auto s = family_series({Family::goettsche_cells, 3}, 5);
	CHECK(s.row_sum(5) == 7);
	CHECK(s.row_sum(5) == oracles::pentagonal_p(5));
}

TEST_CASE("residual crank row sums count overpartitions")
{
	auto s = family_series({Family::residual_crank, 4}, 8);
	const long expected[] = {1, 2, 4, 8, 14, 24, 40, 64, 100};
	for (int n = 0; n <= 8; ++n) CHECK(s.row_sum(n) == expected[n]);
}

TEST_CASE("conservation against independent univariate paths")
{
	const int N = 60;
	std::vector<FamilySpec> specs;
	for (int b : {2, 3, 5}) {
		specs.push_back({Family::rank, b});
		specs.push_back({Family::crank, b});
		specs.push_back({Family::residual_crank, b});
		specs.push_back({Family::pp_trace, b});
		specs.push_back({Family::betti_x1, b});
		specs.push_back({Family::betti_x2, b});
		specs.push_back({Family::betti_x3, b});
		specs.push_back({Family::betti_x4, b, 2});
		specs.push_back({Family::goettsche_cells, b});
	}
	for (const auto& spec : specs) {
		auto series = family_series(spec, N);
		bool p_scale = spec.family == Family::rank ||
			       spec.family == Family::crank ||
			       spec.family == Family::goettsche_cells;
		auto totals = family_total_series(spec, N);
		for (int n = 0; n <= N; ++n) {
			REQUIRE(series.row_sum(n) == totals.coefficient(n));
			if (p_scale)
				REQUIRE(series.row_sum(n) ==
					oracles::pentagonal_p(n));
		}
	}
}

TEST_CASE("coarsening residue classes is consistent")
{
	/* Summing counts over the fiber {a, a+b', a+2b', ...} mod b must
	 * reproduce the modulus-b' expansion. */
	const int N = 40, b = 12;
	std::vector<FamilySpec> specs = {{Family::crank, b},
					 {Family::pp_trace, b},
					 {Family::betti_x4, b, 2},
					 {Family::goettsche_cells, b}};
	for (auto spec : specs) {
		auto fine = family_series(spec, N);
		for (int coarse_b : {2, 3, 4, 6}) {
			auto coarse_spec = spec;
			coarse_spec.modulus = coarse_b;
			auto coarse = family_series(coarse_spec, N);
			for (int n = 0; n <= N; ++n)
				for (int a = 0; a < coarse_b; ++a) {
					mpz_class fiber = 0;
					for (int r = a; r < b; r += coarse_b)
						fiber += fine.coefficient(n, r);
					REQUIRE(fiber ==
						coarse.coefficient(n, a));
				}
		}
	}
}

TEST_CASE("betti families vanish on odd classes for even moduli")
{
	const int N = 60;
	for (int b : {2, 4, 6}) {
		for (Family family : {Family::betti_x1, Family::betti_x2,
				      Family::betti_x3, Family::betti_x4}) {
			FamilySpec spec{family, b, 2};
			auto s = family_series(spec, N);
			for (int n = 0; n <= N; ++n)
				for (int a = 1; a < b; a += 2)
					REQUIRE(s.coefficient(n, a) == 0);
		}
	}
}

TEST_CASE("nonnegativity of counting series")
{
	const int N = 120;
	std::vector<FamilySpec> specs = {
		{Family::rank, 5},	      {Family::crank, 5},
		{Family::residual_crank, 5}, {Family::pp_trace, 2},
		{Family::goettsche_cells, 3}, {Family::betti_x1, 4},
		{Family::betti_x2, 4},	      {Family::betti_x3, 3},
		{Family::betti_x4, 6, 3},
	};
	for (const auto& spec : specs) {
		auto s = family_series(spec, N);
		for (int n = 0; n <= N; ++n) {
			if (spec.family == Family::crank && n == 1) continue;
			for (int r = 0; r < spec.modulus; ++r)
				REQUIRE(s.coefficient(n, r) >= 0);
		}
	}
}

TEST_CASE("rank and crank match enumeration in a window")
{
	for (int b : {2, 5}) {
		auto rank = family_series({Family::rank, b}, 16);
		auto crank = family_series({Family::crank, b}, 16);
		for (int n = 0; n <= 16; ++n)
			for (int a = 0; a < b; ++a) {
				REQUIRE(rank.coefficient(n, a) ==
					oracles::count_statistic(Family::rank,
								 a, b, n));
				if (n != 1)
					REQUIRE(crank.coefficient(n, a) ==
						oracles::count_statistic(
							Family::crank, a, b, n));
			}
	}
}

TEST_CASE("spec validation")
{
	CHECK_THROWS_AS(validate({Family::rank, 1}), std::invalid_argument);
	CHECK_THROWS_AS(validate({Family::betti_x4, 3, 0}),
			std::invalid_argument);
	CHECK_NOTHROW(validate({Family::betti_x4, 3, 1}));

	CHECK(family_from_name("pp-trace") == Family::pp_trace);
	CHECK(family_from_name("betti-x4") == Family::betti_x4);
	CHECK(!family_from_name("no-such-family"));
	CHECK(family_names().size() == 9);
}
