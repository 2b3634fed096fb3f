#include "qdist/residue_series.hpp"

#include <ostream>
#include <stdexcept>

namespace qdist {

ResidueClassSeries::ResidueClassSeries(int modulus, int truncation)
	: modulus_(modulus), truncation_(truncation)
{
	if (modulus < 1)
		throw std::invalid_argument("modulus must be >= 1");
	if (truncation < 0)
		throw std::invalid_argument("truncation must be >= 0");
	coeffs_.resize(static_cast<std::size_t>(truncation + 1) * modulus);
}

ResidueClassSeries ResidueClassSeries::one(int modulus, int truncation)
{
	ResidueClassSeries s(modulus, truncation);
	s.coeffs_[0] = 1;
	return s;
}

const mpz_class& ResidueClassSeries::coefficient(int n, int r) const
{
	if (n < 0 || n > truncation_)
		throw std::out_of_range("q-exponent out of range");
	if (r < 0 || r >= modulus_)
		throw std::out_of_range("residue out of range");
	return row(n)[r];
}

mpz_class& ResidueClassSeries::coefficient(int n, int r)
{
	if (n < 0 || n > truncation_)
		throw std::out_of_range("q-exponent out of range");
	if (r < 0 || r >= modulus_)
		throw std::out_of_range("residue out of range");
	return row(n)[r];
}

mpz_class ResidueClassSeries::row_sum(int n) const
{
	if (n < 0 || n > truncation_)
		throw std::out_of_range("q-exponent out of range");
	mpz_class total = 0;
	const mpz_class* src = row(n);
	for (int r = 0; r < modulus_; ++r)
		mpz_add(total.get_mpz_t(), total.get_mpz_t(), src[r].get_mpz_t());
	return total;
}

ResidueClassSeries
ResidueClassSeries::operator*(const ResidueClassSeries& rhs) const
{
	if (modulus_ != rhs.modulus_)
		throw std::invalid_argument("modulus mismatch in series product");
	if (truncation_ != rhs.truncation_)
		throw std::invalid_argument("truncation mismatch in series product");

	const int b = modulus_, N = truncation_;
	ResidueClassSeries out(b, N);

	for (int n1 = 0; n1 <= N; ++n1) {
		const mpz_class* a = row(n1);
		for (int r1 = 0; r1 < b; ++r1) {
			if (mpz_sgn(a[r1].get_mpz_t()) == 0) continue;
			for (int n2 = 0; n2 + n1 <= N; ++n2) {
				const mpz_class* c = rhs.row(n2);
				mpz_class* dst = out.row(n1 + n2);
				for (int r2 = 0; r2 < b; ++r2) {
					if (mpz_sgn(c[r2].get_mpz_t()) == 0) continue;
					int r = r1 + r2;
					if (r >= b) r -= b;
					mpz_addmul(dst[r].get_mpz_t(),
						   a[r1].get_mpz_t(),
						   c[r2].get_mpz_t());
				}
			}
		}
	}
	return out;
}

ResidueClassSeries ResidueClassSeries::inverse() const
{
	const int b = modulus_, N = truncation_;

	if (coeffs_[0] != 1)
		throw std::domain_error("series is not invertible: constant term != 1");
	for (int r = 1; r < b; ++r)
		if (mpz_sgn(coeffs_[static_cast<std::size_t>(r)].get_mpz_t()) != 0)
			throw std::domain_error("series is not invertible: constant term is not the unit");

	/* B[n] = -sum_{k=1..n} A[k] * B[n-k], convolving residues mod b. */
	ResidueClassSeries out(b, N);
	out.coeffs_[0] = 1;

	std::vector<mpz_class> acc(b);
	for (int n = 1; n <= N; ++n) {
		for (int r = 0; r < b; ++r) acc[r] = 0;
		for (int k = 1; k <= n; ++k) {
			const mpz_class* a = row(k);
			const mpz_class* prev = out.row(n - k);
			for (int r1 = 0; r1 < b; ++r1) {
				if (mpz_sgn(a[r1].get_mpz_t()) == 0) continue;
				for (int r2 = 0; r2 < b; ++r2) {
					if (mpz_sgn(prev[r2].get_mpz_t()) == 0) continue;
					int r = r1 + r2;
					if (r >= b) r -= b;
					mpz_addmul(acc[r].get_mpz_t(),
						   a[r1].get_mpz_t(),
						   prev[r2].get_mpz_t());
				}
			}
		}
		mpz_class* dst = out.row(n);
		for (int r = 0; r < b; ++r)
			mpz_neg(dst[r].get_mpz_t(), acc[r].get_mpz_t());
	}
	return out;
}

void ResidueClassSeries::apply_factor(int residue_exp, int q_exp, int power)
{
	if (q_exp < 1)
		throw std::invalid_argument("factor q-exponent must be >= 1");

	const int b = modulus_, N = truncation_;
	const int e = ((residue_exp % b) + b) % b;

	if (power == 0 || q_exp > N) return;

	int rounds = power < 0 ? -power : power;
	for (int round = 0; round < rounds; ++round) {
		if (power < 0) {
			/* C = S/(1 - t^e q^k): C[n] = S[n] + t^e C[n-k],
			 * ascending n reads already-updated rows. */
			for (int n = q_exp; n <= N; ++n) {
				const mpz_class* src = row(n - q_exp);
				mpz_class* dst = row(n);
				for (int r = 0; r < b; ++r) {
					int rr = r + e;
					if (rr >= b) rr -= b;
					mpz_add(dst[rr].get_mpz_t(),
						dst[rr].get_mpz_t(),
						src[r].get_mpz_t());
				}
			}
		} else {
			/* C = S*(1 - t^e q^k): descending n reads rows that
			 * still hold the original S. */
			for (int n = N; n >= q_exp; --n) {
				const mpz_class* src = row(n - q_exp);
				mpz_class* dst = row(n);
				for (int r = 0; r < b; ++r) {
					int rr = r + e;
					if (rr >= b) rr -= b;
					mpz_sub(dst[rr].get_mpz_t(),
						dst[rr].get_mpz_t(),
						src[r].get_mpz_t());
				}
			}
		}
	}
}

void ResidueClassSeries::apply_polynomial(const std::vector<PolyTerm>& terms)
{
	const int b = modulus_, N = truncation_;
	ResidueClassSeries out(b, N);

	for (const PolyTerm& term : terms) {
		if (term.q_exp < 0)
			throw std::invalid_argument("polynomial q-exponent must be >= 0");
		const int e = ((term.residue_exp % b) + b) % b;
		mpz_class c = term.coef;
		if (mpz_sgn(c.get_mpz_t()) == 0) continue;
		for (int n = term.q_exp; n <= N; ++n) {
			const mpz_class* src = row(n - term.q_exp);
			mpz_class* dst = out.row(n);
			for (int r = 0; r < b; ++r) {
				int rr = r + e;
				if (rr >= b) rr -= b;
				mpz_addmul(dst[rr].get_mpz_t(),
					   src[r].get_mpz_t(),
					   c.get_mpz_t());
			}
		}
	}
	*this = std::move(out);
}

void ResidueClassSeries::add_shifted(const ResidueClassSeries& other, int shift)
{
	if (modulus_ != other.modulus_)
		throw std::invalid_argument("modulus mismatch in add_shifted");
	if (shift < 0)
		throw std::invalid_argument("shift must be >= 0");

	const int b = modulus_, N = truncation_;
	for (int n = shift; n <= N; ++n) {
		if (n - shift > other.truncation_) break;
		const mpz_class* src = other.row(n - shift);
		mpz_class* dst = row(n);
		for (int r = 0; r < b; ++r)
			mpz_add(dst[r].get_mpz_t(), dst[r].get_mpz_t(),
				src[r].get_mpz_t());
	}
}

bool ResidueClassSeries::operator==(const ResidueClassSeries& rhs) const
{
	return modulus_ == rhs.modulus_ && truncation_ == rhs.truncation_ &&
	       coeffs_ == rhs.coeffs_;
}

void ResidueClassSeries::write_csv(std::ostream& os) const
{
	os << "n";
	for (int r = 0; r < modulus_; ++r) os << ",r" << r;
	os << ",total\n";
	for (int n = 0; n <= truncation_; ++n) {
		os << n;
		const mpz_class* src = row(n);
		mpz_class total = 0;
		for (int r = 0; r < modulus_; ++r) {
			os << ',' << src[r].get_str();
			total += src[r];
		}
		os << ',' << total.get_str() << '\n';
	}
}

} // namespace qdist
