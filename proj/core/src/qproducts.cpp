#include "qdist/qproducts.hpp"

#include "qdist/errors.hpp"
#include "qdist/specfun.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qdist {
namespace qp {

namespace {

constexpr double pi = std::numbers::pi;
using cd = std::complex<double>;

/* Exact period-b table of e^{2 pi i k / b}. */
std::vector<cd> roots_of_unity(int b)
{
	std::vector<cd> u(static_cast<std::size_t>(b));
	for (int k = 0; k < b; ++k)
		u[k] = std::polar(1.0, 2.0 * pi * k / b);
	return u;
}

/* Factor count so the dropped product tail is below tol; `weighted`
 * covers exponents growing linearly with the index (the trace product). */
long product_length(double abs_q, const Tail& tail, bool weighted)
{
	if (!(abs_q < 1.0))
		throw std::domain_error("q-products require |q| < 1");
	if (abs_q < tail.tol) return 1;

	double x = -std::log(abs_q);
	double base = std::log(1.0 / (tail.tol * (1.0 - abs_q)));
	double m = base / x + 2.0;
	if (weighted)
		for (int it = 0; it < 3; ++it)
			m = (base + std::log(m + 1.0) - std::log(1.0 - abs_q)) / x + 2.0;
	long steps = static_cast<long>(m) + 1;
	if (steps > tail.cap)
		throw capacity_error("q-product tail not certifiable within the factor cap; |z| too small");
	return steps;
}

/* sum_{n=1}^{M} weight(n) * log(1 - zeta^{step(n)} q^n). The running
 * power q^n is resynced from exp periodically so no drift accumulates
 * over long products. */
template <typename StepFn, typename WeightFn>
cd log_product(const std::vector<cd>& roots, StepFn&& step, WeightFn&& weight,
	       cd q, long factors)
{
	cd sum = 0.0;
	cd qn = 1.0;
	const cd logq = std::log(q);
	for (long n = 1; n <= factors; ++n) {
		if (n % 32 == 1)
			qn = std::exp(static_cast<double>(n) * logq);
		else
			qn *= q;
		sum += weight(n) * std::log(1.0 - roots[step(n)] * qn);
	}
	return sum;
}

cd log_pochhammer_inf(cd q, const Tail& tail)
{
	long M = product_length(std::abs(q), tail, false);
	static const std::vector<cd> unit = {cd(1.0, 0.0)};
	return log_product(unit, [](long) { return 0; },
			   [](long) { return 1.0; }, q, M);
}

cd log_f1(cd zeta, cd q, const Tail& tail)
{
	long M = product_length(std::abs(q), tail, false);
	std::vector<cd> roots = {zeta};
	return log_product(roots, [](long) { return 0; },
			   [](long) { return 1.0; }, q, M);
}

cd log_f3(int b, int j, cd q, const Tail& tail)
{
	long M = product_length(std::abs(q), tail, false);
	std::vector<cd> roots = roots_of_unity(b);
	return log_product(roots,
			   [&](long n) { return static_cast<int>(((n - 1) * j) % b); },
			   [](long) { return 1.0; }, q, M);
}

cd log_pp(cd zeta, cd q, const Tail& tail)
{
	long M = product_length(std::abs(q), tail, true);
	std::vector<cd> roots = {zeta};
	return -log_product(roots, [](long) { return 0; },
			    [](long n) { return static_cast<double>(n); }, q, M);
}

/* R(zeta;q) = sum_k q^{k^2} / prod_{i<=k} (1 - zeta q^i)(1 - conj(zeta) q^i)
 * for zeta on the unit circle, zeta != 1. Term magnitudes are crushed by
 * q^{k^2} once k^2 Re(z) outweighs log(1/tol). */
cd rank_value(cd zeta, cd q, const Tail& tail)
{
	cd sum = 1.0;
	cd den = 1.0;
	cd q_sq = 1.0; // q^{k^2}
	cd q_k = 1.0;  // q^k
	double abs_q = std::abs(q);
	if (!(abs_q < 1.0))
		throw std::domain_error("rank series requires |q| < 1");
	for (long k = 1; k < 100000; ++k) {
		q_k *= q;
		q_sq *= q_k;
		q_sq *= q_k;
		q_sq /= q; // q^{k^2} = q^{(k-1)^2} q^{2k-1}
		den *= (1.0 - zeta * q_k) * (1.0 - std::conj(zeta) * q_k);
		cd term = q_sq / den;
		sum += term;
		if (std::pow(abs_q, static_cast<double>(k) * k) <
		    tail.tol * 1e-2)
			return sum;
	}
	throw capacity_error("rank series did not converge; |z| too small");
}

} // namespace

std::complex<double> family_h_log(const FamilySpec& spec, int j, cd z,
				  const Tail& tail)
{
	validate(spec);
	const int b = spec.modulus;
	if (j < 0 || j >= b)
		throw std::invalid_argument("root index out of range");
	if (!(z.real() > 0.0))
		throw std::domain_error("requires Re(z) > 0");

	const cd q = std::exp(-z);
	const std::vector<cd> u = roots_of_unity(b);
	const cd zeta = u[j];
	auto zp = [&](long k) { return u[((j * k) % b + b) % b]; };

	switch (spec.family) {
	case Family::rank:
		if (j == 0) return -log_pochhammer_inf(q, tail);
		return std::log(rank_value(zeta, q, tail));

	case Family::crank:
		return log_pochhammer_inf(q, tail) - log_f1(zeta, q, tail) -
		       log_f1(std::conj(zeta), q, tail);

	case Family::residual_crank:
		return log_pochhammer_inf(q * q, tail) -
		       log_f1(zeta, q, tail) - log_f1(std::conj(zeta), q, tail);

	case Family::pp_trace:
		return log_pp(zeta, q, tail);

	case Family::betti_x1:
		return std::log(1.0 + zp(2)) - std::log(1.0 - zp(2) * q) -
		       std::log(1.0 - zp(4) * q * q) -
		       log_f3(b, (2 * j) % b, q, tail);

	case Family::betti_x2:
		return std::log(1.0 + zp(2) - zp(2) * q) -
		       std::log(1.0 - zp(2) * q) -
		       std::log(1.0 - zp(4) * q * q) -
		       log_f3(b, (2 * j) % b, q, tail);

	case Family::betti_x3:
		return -std::log(1.0 - zp(2) * q) -
		       std::log(1.0 - zp(4) * q * q) -
		       log_f3(b, (2 * j) % b, q, tail);

	case Family::betti_x4: {
		cd sum = -log_f3(b, (2 * j) % b, q, tail);
		cd qi = 1.0;
		for (int i = 1; i <= spec.m; ++i) {
			qi *= q;
			sum -= std::log(1.0 - zp(2 * i) * qi);
		}
		return sum;
	}

	case Family::goettsche_cells:
		return -log_f3(b, j, q, tail);
	}
	throw std::invalid_argument("unknown family");
}

std::complex<double> pochhammer_inf(cd q, const Tail& tail)
{
	return std::exp(log_pochhammer_inf(q, tail));
}

std::complex<double> f1_value(cd zeta, cd q, const Tail& tail)
{
	return std::exp(log_f1(zeta, q, tail));
}

std::complex<double> f3_value(int b, int j, cd q, const Tail& tail)
{
	if (b < 1) throw std::invalid_argument("modulus must be >= 1");
	return std::exp(log_f3(b, ((j % b) + b) % b, q, tail));
}

std::complex<double> pp_value(cd zeta, cd q, const Tail& tail)
{
	return std::exp(log_pp(zeta, q, tail));
}

std::complex<double> family_h_value(const FamilySpec& spec, int j, cd z,
				    const Tail& tail)
{
	return std::exp(family_h_log(spec, j, z, tail));
}

std::complex<double> f1_major(cd w, cd z)
{
	if (std::abs(w - 1.0) < 1e-14)
		throw std::domain_error("f1_major requires w != 1");
	return std::exp(-0.5 * std::log(1.0 - w) -
			w * specfun::lerch_phi_2_1(w) / z);
}

std::complex<double> f3_major(int b, int j, cd z)
{
	if (b < 2) throw std::invalid_argument("modulus must be >= 2");
	if (std::gcd(j, b) != 1)
		throw std::invalid_argument("f3_major requires a primitive root");

	const std::vector<cd> u = roots_of_unity(b);
	cd log_pref = 0.5 * std::log(2.0 * pi) +
		      (0.5 - 1.0 / b) * std::log(static_cast<double>(b) *
						 static_cast<double>(b) * z) -
		      std::log(specfun::gamma_real(1.0 / b));
	for (int i = 1; i < b; ++i)
		log_pref -= (static_cast<double>(i) / b) *
			    std::log(1.0 - u[(static_cast<long>(i) * j) % b]);
	return std::exp(log_pref - pi * pi / (6.0 * b * b * z));
}

double eta_transform_residual(cd z)
{
	if (!(z.real() > 0.0))
		throw std::domain_error("requires Re(z) > 0");
	cd lhs = pochhammer_inf(std::exp(-z));
	cd dual = std::exp(-4.0 * pi * pi / z);
	cd rhs = std::sqrt(2.0 * pi / z) *
		 std::exp((pi / 12.0) * (z / (2.0 * pi) - 2.0 * pi / z)) *
		 pochhammer_inf(dual);
	return std::abs(lhs - rhs);
}

std::pair<double, double> minor_arc_bound_probe(cd z, double M)
{
	double x = z.real(), y = z.imag();
	if (!(x > 0.0) || !(M > 0.0))
		throw std::domain_error("requires Re(z) > 0 and M > 0");
	if (std::abs(y) < M * x || std::abs(y) >= pi)
		throw std::domain_error("minor-arc cone violated: need M x <= |y| < pi");

	double lhs = 1.0 / std::abs(pochhammer_inf(std::exp(-z)));
	double rhs = std::sqrt(x) *
		     std::exp((1.0 / x) * (pi / 12.0 -
					   (1.0 / (2.0 * pi)) *
						   (1.0 - 1.0 / std::sqrt(1.0 + M * M))));
	return {lhs, rhs};
}

} // namespace qp
} // namespace qdist
