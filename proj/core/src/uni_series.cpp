#include "qdist/uni_series.hpp"

#include <stdexcept>
#include <utility>

namespace qdist {

UniSeries::UniSeries(int truncation) : truncation_(truncation)
{
	if (truncation < 0)
		throw std::invalid_argument("truncation must be >= 0");
	coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
}

UniSeries UniSeries::one(int truncation)
{
	UniSeries s(truncation);
	s.coeffs_[0] = 1;
	return s;
}

const mpz_class& UniSeries::coefficient(int n) const
{
	if (n < 0 || n > truncation_)
		throw std::out_of_range("q-exponent out of range");
	return coeffs_[static_cast<std::size_t>(n)];
}

mpz_class& UniSeries::coefficient(int n)
{
	if (n < 0 || n > truncation_)
		throw std::out_of_range("q-exponent out of range");
	return coeffs_[static_cast<std::size_t>(n)];
}

void UniSeries::apply_factor(int q_exp, int power)
{
	if (q_exp < 1)
		throw std::invalid_argument("factor q-exponent must be >= 1");
	if (power == 0 || q_exp > truncation_) return;

	int rounds = power < 0 ? -power : power;
	for (int round = 0; round < rounds; ++round) {
		if (power < 0) {
			for (int n = q_exp; n <= truncation_; ++n)
				mpz_add(coeffs_[n].get_mpz_t(),
					coeffs_[n].get_mpz_t(),
					coeffs_[n - q_exp].get_mpz_t());
		} else {
			for (int n = truncation_; n >= q_exp; --n)
				mpz_sub(coeffs_[n].get_mpz_t(),
					coeffs_[n].get_mpz_t(),
					coeffs_[n - q_exp].get_mpz_t());
		}
	}
}

void UniSeries::apply_polynomial(const std::vector<std::pair<long, int>>& terms)
{
	std::vector<mpz_class> out(coeffs_.size());
	for (const auto& [coef, q_exp] : terms) {
		if (q_exp < 0)
			throw std::invalid_argument("polynomial q-exponent must be >= 0");
		if (coef == 0) continue;
		mpz_class c = coef;
		for (int n = q_exp; n <= truncation_; ++n)
			mpz_addmul(out[n].get_mpz_t(),
				   coeffs_[n - q_exp].get_mpz_t(),
				   c.get_mpz_t());
	}
	coeffs_ = std::move(out);
}

} // namespace qdist
