#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

namespace qdist {
namespace specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

/* Gamma function for x > 0, Lanczos approximation, ~1e-14 relative. */
double gamma_real(double x);

/* Digamma for x > 0 via upward recurrence and the asymptotic series. */
double digamma(double x);

/* Hurwitz zeta(3, a) for a > 0 by direct summation with an
 * Euler-Maclaurin tail. */
double hurwitz_zeta3(double a);

double zeta2(); // pi^2/6
double zeta3();

/* Li_s(w) for s in {2,3}, |w| <= 1, w != 1. Power series inside the
 * half-radius, the log-series expansion about w = 1 elsewhere. */
std::complex<double> polylog(int s, std::complex<double> w);

/* Lerch Phi(w,2,1) = Li_2(w)/w (exact reindexing of the defining sum). */
std::complex<double> lerch_phi_2_1(std::complex<double> w);

/* Exact Bernoulli numbers B_0..B_K via the standard recurrence. */
std::vector<mpq_class> bernoulli_numbers(int K);

/* Bernoulli polynomial B_n(x) by the binomial sum. */
double bernoulli_poly(int n, double x);

/* zeta'(2) = -sum log(n)/n^2, Euler-Maclaurin tail; cached. */
double zeta_prime_2();

/* zeta'(-1) = (1 - gamma - log(2 pi))/12 + zeta'(2)/(2 pi^2), the
 * Glaisher-Kinkelin route; cached, never hardcoded. */
double zeta_prime_minus_1();

} // namespace specfun
} // namespace qdist
