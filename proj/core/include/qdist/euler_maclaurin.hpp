#pragma once

#include <complex>
#include <vector>

namespace qdist {
namespace em {

/* F(u) = -B'(u)/u = e^{-u} / (u (1 - e^{-u})^2), the summand whose
 * shifted lattice sums control the plane-partition trace generating
 * function near the cusp. Evaluated by its Laurent tail for small |u|
 * to dodge the 1/u^3 cancellation. */
std::complex<double> f_value(std::complex<double> u);

/* Laurent coefficients c_n = -(n+2) B_{n+3} / (n+3)! for n >= 0
 * (c_{-3} = 1, c_{-2} = 0, c_{-1} = -1/12 are fixed). */
std::vector<double> c_coefficients(int n_max);

inline constexpr double c_minus3 = 1.0;
inline constexpr double c_minus2 = 0.0;
inline constexpr double c_minus1 = -1.0 / 12.0;

/* I*_{F,1} = integral_0^inf (F(u) - u^{-3} + e^{-u}/(12u)) du, by
 * composite Gauss-Legendre quadrature with an analytic tail; cached. */
double i_star_f1();

/* Same integral at a chosen panel refinement, for reproducibility checks. */
double i_star_f1_quadrature(int refine);

/* Direct evaluation of sum_{m>=0} F((m + j/b) b z); requires Re(z) > 0
 * and raises capacity_error when the term cap is hit before convergence. */
std::complex<double> fsum_direct(int j, int b, std::complex<double> z);

/* The Euler-Maclaurin right side with K power terms:
 *   zeta(3, j/b)/(b^3 z^3) + I_star/(b z)
 *   + (Log(b z) + psi(j/b) + gamma)/(12 b z)
 *   - sum_{n=0}^{K-1} c_n B_{n+1}(j/b)/(n+1) b^n z^n.
 * Asymptotic as z -> 0 in the right half plane; error O(|z|^K). */
std::complex<double> em_fsum(int j, int b, std::complex<double> z, int K);

} // namespace em
} // namespace qdist
