#include "qdist/wright.hpp"

#include "qdist/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdist {
namespace wright {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

double wright_coeff(int j, int r, double A, double B)
{
	if (!(A > 0.0)) throw std::invalid_argument("A must be > 0");
	if (j < 0 || r < 0) throw std::invalid_argument("j, r must be >= 0");

	double x = j + B + 1.5;
	double ratio = 1.0; // Gamma(x+r)/Gamma(x-r) as 2r linear factors
	for (int i = 0; i < 2 * r; ++i) ratio *= x - r + i;

	double r_fact = 1.0;
	for (int i = 2; i <= r; ++i) r_fact *= i;

	double sqrtA = std::sqrt(A);
	return std::pow(-1.0 / (4.0 * sqrtA), r) *
	       std::pow(sqrtA, j + B + 0.5) / (2.0 * std::sqrt(pi)) * ratio /
	       r_fact;
}

std::complex<double> wright_p(int r, const WrightParams& params)
{
	if (r < 0 || static_cast<std::size_t>(r) >= params.alphas.size())
		throw std::invalid_argument("p_r needs alpha_0..alpha_r");
	std::complex<double> sum = 0.0;
	for (int j = 0; j <= r; ++j)
		sum += params.alphas[j] *
		       wright_coeff(j, r - j, params.A, params.B);
	return sum;
}

AsymptoticEstimate wright_main(const WrightParams& params, long n, int R)
{
	if (n < 1) throw std::invalid_argument("n must be >= 1");
	if (R < 1 || static_cast<std::size_t>(R) > params.alphas.size())
		throw std::invalid_argument(
			"R exceeds the number of available alpha_j");

	double nn = static_cast<double>(n);
	double series = 0.0;
	for (int r = 0; r < R; ++r)
		series += wright_p(r, params).real() * std::pow(nn, -0.5 * r);

	AsymptoticEstimate est;
	est.n = n;
	est.terms_used = R;
	est.value = params.equidist_factor *
		    std::pow(nn, (-2.0 * params.B - 3.0) / 4.0) *
		    std::exp(2.0 * std::sqrt(params.A * nn)) * series;
	return est;
}

double equidist_density(int a, int b)
{
	if (b < 2) throw std::invalid_argument("modulus must be >= 2");
	if (a < 0 || a >= b) throw std::invalid_argument("residue out of range");
	if (b % 2 == 1) return 1.0 / b;
	if (a % 2 == 0) return 2.0 / b;
	return 0.0;
}

WrightParams family_wright_params(const FamilySpec& spec, int a)
{
	validate(spec);
	const int b = spec.modulus;
	if (a < 0 || a >= b) throw std::invalid_argument("residue out of range");

	const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * pi);
	WrightParams p;

	switch (spec.family) {
	case Family::rank:
	case Family::crank:
	case Family::goettsche_cells:
		p.A = pi * pi / 6.0;
		p.B = 0.5;
		p.alphas = {inv_sqrt_2pi};
		p.equidist_factor = 1.0 / b;
		return p;

	case Family::residual_crank:
		p.A = pi * pi / 4.0;
		p.B = 0.5;
		p.alphas = {1.0 / (2.0 * std::sqrt(pi))};
		p.equidist_factor = 1.0 / b;
		return p;

	case Family::betti_x1:
		/* Prefactor (1+zeta^2)/((1-zeta^2 q)(1-zeta^4 q^2)) at
		 * zeta = 1 carries 2/(2 z^2) * 2 = twice the X2/X3 weight. */
		p.A = pi * pi / 6.0;
		p.B = -1.5;
		p.alphas = {inv_sqrt_2pi};
		p.equidist_factor = equidist_density(a, b);
		return p;

	case Family::betti_x2:
	case Family::betti_x3:
		p.A = pi * pi / 6.0;
		p.B = -1.5;
		p.alphas = {0.5 * inv_sqrt_2pi};
		p.equidist_factor = equidist_density(a, b);
		return p;

	case Family::betti_x4: {
		/* prod_{j<=m} (1 - e^{-jz})^{-1} = 1/(c_m z^m) + ...,
		 * c_m = m!. */
		double c_m = 1.0;
		for (int i = 2; i <= spec.m; ++i) c_m *= i;
		p.A = pi * pi / 6.0;
		p.B = 0.5 - spec.m;
		p.alphas = {inv_sqrt_2pi / c_m};
		p.equidist_factor = equidist_density(a, b);
		return p;
	}

	case Family::pp_trace:
		throw std::invalid_argument(
			"pp-trace has an e^{A/z^2} cusp expansion; use pp_asymptotic");
	}
	throw std::invalid_argument("unknown family");
}

double pp_asymptotic(long n, PPExponentVariant variant)
{
	if (n < 1) throw std::invalid_argument("n must be >= 1");

	double z3 = specfun::zeta3();
	double e = variant == PPExponentVariant::as_printed ? 7.0 / 56.0
							    : 7.0 / 36.0;
	double half_n = 0.5 * static_cast<double>(n);
	return std::pow(z3, e) / std::sqrt(12.0 * pi) *
	       std::pow(half_n, -25.0 / 36.0) *
	       std::exp(3.0 * std::cbrt(z3) * std::pow(half_n, 2.0 / 3.0) +
			specfun::zeta_prime_minus_1());
}

} // namespace wright
} // namespace qdist
