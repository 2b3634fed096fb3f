#include "qdist/euler_maclaurin.hpp"

#include "qdist/errors.hpp"
#include "qdist/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdist {
namespace em {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> c_table(int n_max)
{
	auto bern = specfun::bernoulli_numbers(n_max + 3);
	std::vector<double> c(static_cast<std::size_t>(n_max) + 1);
	mpz_class factorial = 6; // 3!
	for (int n = 0; n <= n_max; ++n) {
		/* (n+3)! built incrementally. */
		if (n > 0) factorial *= (n + 3);
		mpq_class v = -mpq_class(n + 2) * bern[n + 3] /
			      mpq_class(factorial);
		c[n] = v.get_d();
	}
	return c;
}

/* Integrand of I*_{F,1}. Near zero every piece is O(u^{-3}) while the
 * difference is O(1), so for u < 3/4 it is summed from the Laurent data:
 *   F(u) - u^{-3} + e^{-u}/(12u)
 *     = sum_{n>=0} [c_n + (-1)^{n+1} / (12 (n+1)!)] u^n. */
double i_star_integrand(double u)
{
	static const std::vector<double> c = c_table(40);
	if (u < 0.75) {
		double sum = 0.0, power = 1.0, factorial = 1.0;
		for (int n = 0; n <= 40; ++n) {
			factorial *= (n + 1);
			double sign = (n % 2 == 0) ? -1.0 : 1.0;
			sum += (c[n] + sign / (12.0 * factorial)) * power;
			power *= u;
		}
		return sum;
	}
	double em1 = -std::expm1(-u); // 1 - e^{-u}
	double f = std::exp(-u) / (u * em1 * em1);
	return f - 1.0 / (u * u * u) + std::exp(-u) / (12.0 * u);
}

/* 20-point Gauss-Legendre nodes/weights on [-1,1] by Newton iteration. */
void gauss_legendre_20(std::vector<double>& nodes, std::vector<double>& weights)
{
	const int n = 20;
	nodes.resize(n);
	weights.resize(n);
	for (int i = 0; i < n; ++i) {
		double x = std::cos(pi * (i + 0.75) / (n + 0.5));
		for (int iter = 0; iter < 100; ++iter) {
			double p0 = 1.0, p1 = x;
			for (int k = 2; k <= n; ++k) {
				double p2 = ((2.0 * k - 1.0) * x * p1 -
					     (k - 1.0) * p0) / k;
				p0 = p1;
				p1 = p2;
			}
			double dp = n * (x * p1 - p0) / (x * x - 1.0);
			double dx = p1 / dp;
			x -= dx;
			if (std::abs(dx) < 1e-16) break;
		}
		double p0 = 1.0, p1 = x;
		for (int k = 2; k <= n; ++k) {
			double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
			p0 = p1;
			p1 = p2;
		}
		double dp = n * (x * p1 - p0) / (x * x - 1.0);
		nodes[i] = x;
		weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
	}
}

double integrate_panel(double a, double b)
{
	static std::vector<double> nodes, weights;
	static const bool init = [] {
		gauss_legendre_20(nodes, weights);
		return true;
	}();
	(void)init;
	double mid = 0.5 * (a + b), half = 0.5 * (b - a);
	double sum = 0.0;
	for (std::size_t i = 0; i < nodes.size(); ++i)
		sum += weights[i] * i_star_integrand(mid + half * nodes[i]);
	return half * sum;
}

} // namespace

std::complex<double> f_value(std::complex<double> u)
{
	if (std::abs(u) < 0.5) {
		static const std::vector<double> c = c_table(30);
		std::complex<double> u2 = u * u;
		std::complex<double> sum = 1.0 / (u * u2) + c_minus1 / u;
		std::complex<double> power = 1.0;
		for (int n = 0; n <= 30; ++n) {
			sum += c[n] * power;
			power *= u;
		}
		return sum;
	}
	std::complex<double> em1 = 1.0 - std::exp(-u);
	return std::exp(-u) / (u * em1 * em1);
}

std::vector<double> c_coefficients(int n_max)
{
	if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
	return c_table(n_max);
}

double i_star_f1_quadrature(int refine)
{
	if (refine < 1) throw std::invalid_argument("refine must be >= 1");
	const double cut = 0.75, top = 40.0;

	double total = 0.0;
	int low_panels = 4 * refine;
	for (int i = 0; i < low_panels; ++i) {
		double a = cut * i / low_panels;
		double b = cut * (i + 1) / low_panels;
		total += integrate_panel(a, b);
	}
	/* Geometric panels on [cut, top]. */
	int high_panels = 24 * refine;
	double ratio = std::pow(top / cut, 1.0 / high_panels);
	double a = cut;
	for (int i = 0; i < high_panels; ++i) {
		double b = a * ratio;
		total += integrate_panel(a, b);
		a = b;
	}
	/* Beyond `top` the integrand is -u^{-3} up to O(e^{-u}). */
	total -= 1.0 / (2.0 * top * top);
	return total;
}

double i_star_f1()
{
	static const double value = i_star_f1_quadrature(2);
	return value;
}

std::complex<double> fsum_direct(int j, int b, std::complex<double> z)
{
	if (b < 1 || j < 1 || j > b)
		throw std::invalid_argument("fsum_direct requires 1 <= j <= b");
	if (!(z.real() > 0.0))
		throw std::domain_error("fsum_direct requires Re(z) > 0");

	const long cap = 2000000;
	std::complex<double> sum = 0.0;
	double offset = static_cast<double>(j) / b;
	for (long m = 0; m < cap; ++m) {
		std::complex<double> u = (static_cast<double>(m) + offset) *
					 static_cast<double>(b) * z;
		std::complex<double> term = f_value(u);
		sum += term;
		/* Accept convergence only in the exponential-decay regime
		 * |u| > 1, where the tail is bounded by a few |term|s;
		 * in the power-law regime small terms still sum up. */
		if (std::abs(u) > 1.0 &&
		    std::abs(term) < 1e-18 * (1.0 + std::abs(sum)))
			return sum;
	}
	throw capacity_error("fsum_direct did not converge within the term cap; Re(z) too small");
}

std::complex<double> em_fsum(int j, int b, std::complex<double> z, int K)
{
	if (b < 1 || j < 1 || j > b)
		throw std::invalid_argument("em_fsum requires 1 <= j <= b");
	if (!(z.real() > 0.0))
		throw std::domain_error("em_fsum requires z in the right half plane");
	if (K < 0 || K > 20)
		throw std::invalid_argument("em_fsum supports 0 <= K <= 20");

	const double x = static_cast<double>(j) / b;
	const std::complex<double> bz = static_cast<double>(b) * z;

	std::complex<double> result =
		specfun::hurwitz_zeta3(x) / (bz * bz * bz);
	result += i_star_f1() / bz;
	result += (std::log(bz) + specfun::digamma(x) + specfun::euler_gamma) /
		  (12.0 * bz);

	static const std::vector<double> c = c_table(20);
	std::complex<double> power = 1.0; // (b z)^n
	for (int n = 0; n < K; ++n) {
		result -= c[n] * specfun::bernoulli_poly(n + 1, x) /
			  static_cast<double>(n + 1) * power;
		power *= bz;
	}
	return result;
}

} // namespace em
} // namespace qdist
