#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

namespace qdist {

/* A bivariate power series truncated at q^N whose coefficients live in the
 * group ring Z[t]/(t^b - 1): for each q-power n there is a length-b vector
 * of exact integers, the coefficient of t^r. Specializing t to a b-th root
 * of unity recovers the usual generating functions; keeping t formal makes
 * the root-of-unity orthogonality filter exact in integers, so counts on
 * residue classes come out of a table lookup instead of a floating-point
 * average. */
class ResidueClassSeries {
public:
	/* Zero series with modulus b >= 1 and truncation order N >= 0. */
	ResidueClassSeries(int modulus, int truncation);

	/* Multiplicative identity: t^0 q^0 with coefficient 1. */
	static ResidueClassSeries one(int modulus, int truncation);

	int modulus() const { return modulus_; }
	int truncation() const { return truncation_; }

	/* Coefficient of t^r q^n; range-checked. */
	const mpz_class& coefficient(int n, int r) const;
	mpz_class& coefficient(int n, int r);

	/* Sum of row n over all residues, i.e. the specialization t -> 1.
	 * For the statistic families this is the univariate total count. */
	mpz_class row_sum(int n) const;

	/* Cauchy product with residue exponents reduced mod b. Both factors
	 * must share modulus and truncation. */
	ResidueClassSeries operator*(const ResidueClassSeries& rhs) const;

	/* Multiplicative inverse up to the truncation order. The constant
	 * term must be the group-ring unit (1 at t^0 q^0, 0 elsewhere). */
	ResidueClassSeries inverse() const;

	/* In-place multiplication by (1 - t^e q^k)^s for signed s, realized
	 * as |s| passes of the geometric-factor recurrence, O(N*b) each,
	 * rather than a generic product. k must be >= 1; e is reduced mod b
	 * and may be negative. */
	void apply_factor(int residue_exp, int q_exp, int power);

	/* In-place multiplication by the sparse Laurent polynomial
	 * sum_i coef_i * t^{e_i} q^{k_i} given as (coef, e, k) triples. */
	struct PolyTerm {
		long coef;
		int residue_exp;
		int q_exp;
	};
	void apply_polynomial(const std::vector<PolyTerm>& terms);

	/* this += other * q^shift, rows beyond the truncation dropped. */
	void add_shifted(const ResidueClassSeries& other, int shift);

	bool operator==(const ResidueClassSeries& rhs) const;

	/* CSV serialization: header `n,r0,...,r{b-1},total`, one row per n,
	 * decimal integers. */
	void write_csv(std::ostream& os) const;

private:
	int modulus_;
	int truncation_;
	std::vector<mpz_class> coeffs_; // row-major, (N+1) x b

	const mpz_class* row(int n) const { return &coeffs_[static_cast<std::size_t>(n) * modulus_]; }
	mpz_class* row(int n) { return &coeffs_[static_cast<std::size_t>(n) * modulus_]; }
};

} // namespace qdist
