#pragma once

#include "qdist/families.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace qdist {
namespace wright {

/* Cusp-expansion data F(e^{-z}) ~ z^B e^{A/z} sum alpha_j z^j feeding the
 * circle-method coefficient expansion, plus the progression factor that
 * scales the resulting main term down to one residue class. */
struct WrightParams {
	double A = 0.0;				    // exponential rate, > 0
	double B = 0.0;				    // power of z
	std::vector<std::complex<double>> alphas;   // alpha_0 .. alpha_{N-1}
	std::optional<double> kappa;		    // minor-arc gap, if known
	double cone_slope = 1.0;		    // M in |y| <= M x
	double equidist_factor = 1.0;		    // 1/b or d(a,b)
};

struct AsymptoticEstimate {
	long n = 0;
	double value = 0.0;
	int terms_used = 0;
};

/* c_{j,r} = (-1/(4 sqrt A))^r sqrt(A)^{j+B+1/2} / (2 sqrt pi)
 *           * Gamma(j+B+3/2+r) / (r! Gamma(j+B+3/2-r)).
 * The Gamma ratio is the finite product prod_{i=0}^{2r-1} (x - r + i)
 * with x = j+B+3/2, which is pole-free at the negative arguments that
 * arise for B = -3/2 families. */
double wright_coeff(int j, int r, double A, double B);

/* p_r = sum_{j<=r} alpha_j c_{j,r-j}; requires r < alphas.size(). */
std::complex<double> wright_p(int r, const WrightParams& params);

/* Main-term estimate
 *   factor * n^{(-2B-3)/4} e^{2 sqrt(A n)} sum_{r<R} Re(p_r) n^{-r/2}. */
AsymptoticEstimate wright_main(const WrightParams& params, long n, int R);

/* d(a,b): 1/b for odd b, 2/b for a,b even, 0 for a odd and b even. */
double equidist_density(int a, int b);

/* The Wright parameters of one family's dominant cusp term, progression
 * factor included. The trace family is excluded: its cusp expansion is of
 * e^{A/z^2} type and is served by pp_asymptotic instead. */
WrightParams family_wright_params(const FamilySpec& spec, int a);

enum class PPExponentVariant {
	as_printed, // zeta(3)^{7/56}
	classical   // zeta(3)^{7/36}
};

/* Wright's 1931 plane-partition main term
 *   zeta(3)^e / sqrt(12 pi) (n/2)^{-25/36}
 *     exp(3 zeta(3)^{1/3} (n/2)^{2/3} + zeta'(-1)). */
double pp_asymptotic(long n, PPExponentVariant variant);

} // namespace wright
} // namespace qdist
