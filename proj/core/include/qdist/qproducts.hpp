#pragma once

#include "qdist/families.hpp"

#include <complex>

namespace qdist {
namespace qp {

/* Numeric evaluation of the infinite q-products at q = e^{-z}, truncated
 * so the dropped tail is below `tol` in log scale. Requests whose factor
 * count would exceed `cap` raise capacity_error. */
struct Tail {
	double tol = 1e-13;
	long cap = 500000;
};

/* (q;q)_inf. */
std::complex<double> pochhammer_inf(std::complex<double> q, const Tail& tail = {});

/* F_1(zeta;q) = prod (1 - zeta q^n). */
std::complex<double> f1_value(std::complex<double> zeta, std::complex<double> q,
			      const Tail& tail = {});

/* F_3(zeta;q) = prod (1 - zeta^{n-1} q^n), zeta a b-th root of unity
 * passed as (b, j): zeta = e^{2 pi i j / b}. Powers of zeta are read from
 * an exact period-b table so no phase drift accumulates. */
std::complex<double> f3_value(int b, int j, std::complex<double> q,
			      const Tail& tail = {});

/* Stanley's trace product prod (1 - zeta q^n)^{-n}. */
std::complex<double> pp_value(std::complex<double> zeta, std::complex<double> q,
			      const Tail& tail = {});

/* H(zeta_b^j; e^{-z}) for any family: the generating function evaluated
 * numerically at a root of unity. The log form sums factor logarithms,
 * so it stays finite where the value itself overflows double range
 * (e.g. the trace product grows like e^{zeta(3)/z^2}). */
std::complex<double> family_h_value(const FamilySpec& spec, int j,
				    std::complex<double> z, const Tail& tail = {});
std::complex<double> family_h_log(const FamilySpec& spec, int j,
				  std::complex<double> z, const Tail& tail = {});

/* Leading major-arc main terms (no O(|z|) correction):
 *   F_1(w;e^{-z}) ~ (1-w)^{-1/2} exp(-w Phi(w,2,1)/z)
 *   F_3(w;e^{-z}) ~ sqrt(2 pi) (b^2 z)^{1/2 - 1/b} / Gamma(1/b)
 *                   * prod_{j<b} (1-w^j)^{-j/b} * exp(-pi^2/(6 b^2 z)),
 * with w = e^{2 pi i j / b} (primitive for F_3). */
std::complex<double> f1_major(std::complex<double> w, std::complex<double> z);
std::complex<double> f3_major(int b, int j, std::complex<double> z);

/* |LHS - RHS| of the eta-product transformation
 *   (e^{-z};e^{-z})_inf = sqrt(2 pi / z)
 *     * exp((pi/12)(z/(2 pi) - 2 pi / z)) (e^{-4 pi^2/z};...)_inf,
 * both sides by truncated products. */
double eta_transform_residual(std::complex<double> z);

/* Minor-arc growth diagnostic: returns (|P(e^{-z})|, bound) with
 *   bound = sqrt(x) exp[(1/x)(pi/12 - (1/(2 pi))(1 - 1/sqrt(1+M^2)))],
 * for z = x + iy with M x <= |y| < pi. The bound carries an unspecified
 * absolute constant, so callers compare growth rates, not values. */
std::pair<double, double> minor_arc_bound_probe(std::complex<double> z, double M);

} // namespace qp
} // namespace qdist
