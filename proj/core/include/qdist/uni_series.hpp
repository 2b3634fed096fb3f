#pragma once

#include <gmpxx.h>

#include <vector>

namespace qdist {

/* Univariate truncated power series over Z. Deliberately a separate code
 * path from ResidueClassSeries: it serves as the independent route for
 * total counts (t -> 1 specializations) that conservation checks compare
 * against, so it shares no multiplication logic with the group-ring
 * engine. */
class UniSeries {
public:
	explicit UniSeries(int truncation);

	static UniSeries one(int truncation);

	int truncation() const { return truncation_; }

	const mpz_class& coefficient(int n) const;
	mpz_class& coefficient(int n);

	/* In-place multiplication by (1 - q^k)^s via |s| passes of the
	 * geometric recurrence. */
	void apply_factor(int q_exp, int power);

	/* In-place multiplication by sum_i coef_i q^{k_i}. */
	void apply_polynomial(const std::vector<std::pair<long, int>>& terms);

private:
	int truncation_;
	std::vector<mpz_class> coeffs_;
};

} // namespace qdist
