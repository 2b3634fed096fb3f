#pragma once

#include <string>
#include <vector>

namespace qdist {
namespace identities {

struct Check {
	std::string name;
	std::string detail; // parameter values, human readable
	double residual = 0.0;
	double bound = 0.0;
	bool pass = false;
	bool informational = false; // reported but never fails the suite
};

/* The analytic identity suite at tolerance `tol` for all moduli
 * 2 <= b <= b_max:
 *   - digamma root-of-unity sums against b Log(1 - zeta_b^a),
 *   - the corrected Hurwitz/polylog identity (j = b term included),
 *   - the crank exponent: Re(zeta Phi(zeta,2,1)) closed form and the
 *     conjugate cancellation of the imaginary parts,
 *   - eta transformation residuals at z = 1, 0.5+0.3i, 2 pi,
 *   - Euler-Maclaurin vs direct lattice sums on a 3-point x-ladder
 *     (error must scale like |z|^K).
 * Also reports, as an informational row, the gap of the as-printed
 * polylog identity (summing j <= b-1 only), which misses zeta(3). */
std::vector<Check> run_suite(int b_max, double tol);

bool all_pass(const std::vector<Check>& checks);

} // namespace identities
} // namespace qdist
