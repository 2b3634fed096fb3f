#include "qdist/specfun.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qdist {
namespace specfun {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

double gamma_real(double x)
{
	if (!(x > 0.0))
		throw std::domain_error("gamma_real requires x > 0");

	/* Lanczos, g = 7, 9 coefficients. */
	static const double coef[9] = {
		0.99999999999980993,
		676.5203681218851,
		-1259.1392167224028,
		771.32342877765313,
		-176.61502916214059,
		12.507343278686905,
		-0.13857109526572012,
		9.9843695780195716e-6,
		1.5056327351493116e-7,
	};

	if (x < 0.5) return gamma_real(x + 1.0) / x;

	double z = x - 1.0;
	double a = coef[0];
	for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
	double t = z + 7.5;
	return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double digamma(double x)
{
	if (!(x > 0.0))
		throw std::domain_error("digamma requires x > 0");

	double acc = 0.0;
	while (x < 10.0) {
		acc -= 1.0 / x;
		x += 1.0;
	}

	/* psi(x) ~ log x - 1/(2x) - sum B_{2k}/(2k x^{2k}). */
	double inv = 1.0 / x, inv2 = inv * inv;
	double series = std::log(x) - 0.5 * inv;
	static const double tail[] = {
		-1.0 / 12.0,   1.0 / 120.0,  -1.0 / 252.0, 1.0 / 240.0,
		-1.0 / 132.0, 691.0 / 32760.0, -1.0 / 12.0,
	};
	double power = inv2;
	for (double c : tail) {
		series += c * power;
		power *= inv2;
	}
	return acc + series;
}

double hurwitz_zeta3(double a)
{
	if (!(a > 0.0))
		throw std::domain_error("hurwitz_zeta3 requires a > 0");

	const int head = 20;
	double sum = 0.0;
	for (int n = 0; n < head; ++n) {
		double d = n + a;
		sum += 1.0 / (d * d * d);
	}

	/* Euler-Maclaurin tail from M = head:
	 * sum_{n>=M} (n+a)^{-3} = (M+a)^{-2}/2 + (M+a)^{-3}/2
	 *   + (1/4)(M+a)^{-4} - (1/12)(M+a)^{-6} + (1/12)(M+a)^{-8} - ... */
	double d = head + a;
	double i2 = 1.0 / (d * d);
	sum += 0.5 * i2 + 0.5 * i2 / d;
	double p4 = i2 * i2;
	sum += 0.25 * p4;			   // -B_2/2! * f'(M)
	sum -= (1.0 / 12.0) * p4 * i2;		   // B_4/4! * f'''(M)
	sum += (1.0 / 12.0) * p4 * p4;		   // -B_6/6! * f^(5)(M)
	sum -= (3.0 / 20.0) * p4 * p4 * i2;	   // B_8/8! * f^(7)(M)
	return sum;
}

double zeta2()
{
	return pi * pi / 6.0;
}

double zeta3()
{
	static const double value = hurwitz_zeta3(1.0);
	return value;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_cache = {mpq_class(1)};

/* B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j. */
void extend_bernoulli(int K)
{
	for (int m = static_cast<int>(bernoulli_cache.size()); m <= K; ++m) {
		mpq_class sum = 0;
		mpz_class binom = 1; // C(m+1, 0)
		for (int j = 0; j < m; ++j) {
			sum += mpq_class(binom) * bernoulli_cache[j];
			binom *= (m + 1 - j);
			binom /= (j + 1);
		}
		mpq_class value = -sum / (m + 1);
		value.canonicalize();
		bernoulli_cache.push_back(value);
	}
}

mpq_class bernoulli_exact(int m)
{
	std::lock_guard<std::mutex> lock(bernoulli_mutex);
	extend_bernoulli(m);
	return bernoulli_cache[m];
}

/* zeta at integer arguments <= 3, as needed by the polylog log-series:
 * zeta(3), zeta(2), zeta(0) = -1/2, zeta(-m) = -B_{m+1}/(m+1). */
double zeta_int(int m)
{
	if (m == 3) return zeta3();
	if (m == 2) return zeta2();
	if (m == 1) throw std::domain_error("zeta(1) pole");
	if (m == 0) return -0.5;
	/* zeta(-j) = -B_{j+1}/(j+1) for j >= 1. */
	int j = -m;
	mpq_class v = -bernoulli_exact(j + 1) / (j + 1);
	return v.get_d();
}

std::complex<double> polylog_series(int s, std::complex<double> w)
{
	std::complex<double> term = w, sum = w;
	for (int n = 2; n < 300; ++n) {
		term *= w;
		std::complex<double> add =
			term / std::pow(static_cast<double>(n), s);
		sum += add;
		if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
	}
	return sum;
}

/* Expansion about w = 1 in powers of mu = Log w, valid for |mu| < 2 pi:
 *   Li_s(w) = sum_{k>=0, k != s-1} zeta(s-k) mu^k / k!
 *           + mu^{s-1}/(s-1)! (H_{s-1} - Log(-mu)).   (s integer >= 2) */
std::complex<double> polylog_log_series(int s, std::complex<double> w)
{
	std::complex<double> mu = std::log(w);
	double harmonic = 0.0;
	for (int i = 1; i <= s - 1; ++i) harmonic += 1.0 / i;

	/* |mu| <= sqrt(log(2)^2 + pi^2) < 2 pi here, and
	 * zeta(s-k) mu^k / k! decays like (|mu|/2 pi)^k, so a fixed 70
	 * terms land far below double precision. zeta(-even) terms vanish,
	 * which rules out a smallest-term stopping rule. */
	std::complex<double> sum = 0.0;
	std::complex<double> mu_pow = 1.0; // mu^k / k!
	for (int k = 0; k <= 70; ++k) {
		if (k == s - 1)
			sum += mu_pow * (harmonic - std::log(-mu));
		else
			sum += zeta_int(s - k) * mu_pow;
		mu_pow *= mu / static_cast<double>(k + 1);
	}
	return sum;
}

} // namespace

std::complex<double> polylog(int s, std::complex<double> w)
{
	if (s != 2 && s != 3)
		throw std::invalid_argument("polylog supports s in {2,3}");
	if (std::abs(w) > 1.0 + 1e-12)
		throw std::domain_error("polylog requires |w| <= 1");
	if (std::abs(w - 1.0) < 1e-14)
		throw std::domain_error("polylog pole-adjacent point w = 1");

	if (std::abs(w) <= 0.5) return polylog_series(s, w);
	return polylog_log_series(s, w);
}

std::complex<double> lerch_phi_2_1(std::complex<double> w)
{
	if (std::abs(w) < 1e-300)
		throw std::domain_error("lerch_phi_2_1 requires w != 0");
	return polylog(2, w) / w;
}

std::vector<mpq_class> bernoulli_numbers(int K)
{
	if (K < 0) throw std::invalid_argument("K must be >= 0");
	std::lock_guard<std::mutex> lock(bernoulli_mutex);
	extend_bernoulli(K);
	return std::vector<mpq_class>(bernoulli_cache.begin(),
				      bernoulli_cache.begin() + K + 1);
}

double bernoulli_poly(int n, double x)
{
	if (n < 0) throw std::invalid_argument("n must be >= 0");
	auto b = bernoulli_numbers(n);
	/* B_n(x) = sum_k C(n,k) B_k x^{n-k}. */
	double sum = 0.0;
	mpz_class binom = 1;
	for (int k = 0; k <= n; ++k) {
		sum += mpz_class(binom).get_d() * b[k].get_d() *
		       std::pow(x, n - k);
		binom *= (n - k);
		binom /= (k + 1);
	}
	return sum;
}

double zeta_prime_2()
{
	static const double value = [] {
		/* -zeta'(2) = sum_{n>=2} log(n)/n^2; head plus EM tail with
		 * f = log(x)/x^2:
		 *   integral = (log M + 1)/M
		 *   f'   = (1 - 2 log x)/x^3
		 *   f''' = (26 - 24 log x)/x^5
		 *   f^5  = (1044 - 720 log x)/x^7 */
		const int M = 64;
		double sum = 0.0;
		for (int n = 2; n < M; ++n)
			sum += std::log(static_cast<double>(n)) / (static_cast<double>(n) * n);
		double lm = std::log(static_cast<double>(M));
		double m = M;
		sum += (lm + 1.0) / m;
		sum += 0.5 * lm / (m * m);
		sum -= (1.0 - 2.0 * lm) / (12.0 * m * m * m);
		sum += (26.0 - 24.0 * lm) / (720.0 * std::pow(m, 5));
		sum -= (1044.0 - 720.0 * lm) / (30240.0 * std::pow(m, 7));
		return -sum;
	}();
	return value;
}

double zeta_prime_minus_1()
{
	static const double value =
		(1.0 - euler_gamma - std::log(2.0 * pi)) / 12.0 +
		zeta_prime_2() / (2.0 * pi * pi);
	return value;
}

} // namespace specfun
} // namespace qdist
