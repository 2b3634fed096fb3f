#include "qdist/families.hpp"

#include <stdexcept>

namespace qdist {

namespace {

const std::vector<std::pair<Family, const char*>>& name_table()
{
	static const std::vector<std::pair<Family, const char*>> table = {
		{Family::rank, "rank"},
		{Family::crank, "crank"},
		{Family::residual_crank, "residual-crank"},
		{Family::pp_trace, "pp-trace"},
		{Family::betti_x1, "betti-x1"},
		{Family::betti_x2, "betti-x2"},
		{Family::betti_x3, "betti-x3"},
		{Family::betti_x4, "betti-x4"},
		{Family::goettsche_cells, "goettsche-cells"},
	};
	return table;
}

/* Folds F_3(t^2;q)^{-1} = prod (1 - t^{2(n-1)} q^n)^{-1} into S. */
void fold_f3_squared_inverse(ResidueClassSeries& s)
{
	for (int n = 1; n <= s.truncation(); ++n)
		s.apply_factor(2 * (n - 1), n, -1);
}

/* Crank-type core: inverse factors of F_1(t;q) F_1(t^{-1};q). */
void fold_crank_denominator(ResidueClassSeries& s)
{
	for (int n = 1; n <= s.truncation(); ++n) {
		s.apply_factor(1, n, -1);
		s.apply_factor(-1, n, -1);
	}
}

ResidueClassSeries rank_series(int b, int N)
{
	/* Classical single-sum representation
	 *   R(t;q) = sum_{k>=0} q^{k^2} / ((tq;q)_k (t^{-1}q;q)_k),
	 * O(sqrt(N)) terms, each folded with 2k geometric factors. The k-th
	 * partial denominator is a finite product, so every term is exact. */
	ResidueClassSeries sum(b, N);
	ResidueClassSeries term = ResidueClassSeries::one(b, N);
	sum.add_shifted(term, 0);
	for (int k = 1; k * k <= N; ++k) {
		term.apply_factor(1, k, -1);
		term.apply_factor(-1, k, -1);
		sum.add_shifted(term, k * k);
	}
	return sum;
}

} // namespace

const char* family_name(Family f)
{
	for (const auto& [fam, name] : name_table())
		if (fam == f) return name;
	throw std::invalid_argument("unknown family");
}

std::optional<Family> family_from_name(const std::string& name)
{
	for (const auto& [fam, fname] : name_table())
		if (name == fname) return fam;
	return std::nullopt;
}

const std::vector<std::string>& family_names()
{
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (const auto& [fam, name] : name_table()) v.emplace_back(name);
		return v;
	}();
	return names;
}

void validate(const FamilySpec& spec)
{
	if (spec.modulus < 2)
		throw std::invalid_argument("modulus must be >= 2");
	if (spec.family == Family::betti_x4 && spec.m < 1)
		throw std::invalid_argument("betti-x4 requires m >= 1");
}

ResidueClassSeries f1_series(int modulus, int truncation)
{
	ResidueClassSeries s = ResidueClassSeries::one(modulus, truncation);
	for (int n = 1; n <= truncation; ++n) s.apply_factor(1, n, 1);
	return s;
}

ResidueClassSeries f3_series(int modulus, int truncation)
{
	ResidueClassSeries s = ResidueClassSeries::one(modulus, truncation);
	for (int n = 1; n <= truncation; ++n) s.apply_factor(n - 1, n, 1);
	return s;
}

ResidueClassSeries family_series(const FamilySpec& spec, int truncation)
{
	validate(spec);
	const int b = spec.modulus, N = truncation;
	ResidueClassSeries s = ResidueClassSeries::one(b, N);

	switch (spec.family) {
	case Family::rank:
		return rank_series(b, N);

	case Family::crank:
		/* (q;q)_inf / (F_1(t;q) F_1(t^{-1};q)); the infinite
		 * Pochhammer is exact at truncation N using factors n <= N. */
		for (int n = 1; n <= N; ++n) s.apply_factor(0, n, 1);
		fold_crank_denominator(s);
		return s;

	case Family::residual_crank:
		/* (q^2;q^2)_inf / (F_1(t;q) F_1(t^{-1};q)). */
		for (int n = 1; 2 * n <= N; ++n) s.apply_factor(0, 2 * n, 1);
		fold_crank_denominator(s);
		return s;

	case Family::pp_trace:
		/* Stanley's product prod (1 - t q^n)^{-n}, factor n folded as
		 * n repeated geometric recurrences. */
		for (int n = 1; n <= N; ++n) s.apply_factor(1, n, -n);
		return s;

	case Family::betti_x1:
		fold_f3_squared_inverse(s);
		s.apply_factor(2, 1, -1);
		s.apply_factor(4, 2, -1);
		s.apply_polynomial({{1, 0, 0}, {1, 2, 0}});
		return s;

	case Family::betti_x2:
		fold_f3_squared_inverse(s);
		s.apply_factor(2, 1, -1);
		s.apply_factor(4, 2, -1);
		s.apply_polynomial({{1, 0, 0}, {1, 2, 0}, {-1, 2, 1}});
		return s;

	case Family::betti_x3:
		fold_f3_squared_inverse(s);
		s.apply_factor(2, 1, -1);
		s.apply_factor(4, 2, -1);
		return s;

	case Family::betti_x4:
		fold_f3_squared_inverse(s);
		for (int j = 1; j <= spec.m; ++j) s.apply_factor(2 * j, j, -1);
		return s;

	case Family::goettsche_cells:
		/* prod (1 - t^{n-1} q^n)^{-1} = F_3(t;q)^{-1}. */
		for (int n = 1; n <= N; ++n) s.apply_factor(n - 1, n, -1);
		return s;
	}
	throw std::invalid_argument("unknown family");
}

UniSeries family_total_series(const FamilySpec& spec, int truncation)
{
	validate(spec);
	const int N = truncation;
	UniSeries s = UniSeries::one(N);

	switch (spec.family) {
	case Family::rank:
	case Family::crank:
	case Family::goettsche_cells:
		/* All specialize to (q;q)_inf^{-1}. */
		for (int n = 1; n <= N; ++n) s.apply_factor(n, -1);
		return s;

	case Family::residual_crank:
		for (int n = 1; 2 * n <= N; ++n) s.apply_factor(2 * n, 1);
		for (int n = 1; n <= N; ++n) s.apply_factor(n, -2);
		return s;

	case Family::pp_trace:
		for (int n = 1; n <= N; ++n) s.apply_factor(n, -n);
		return s;

	case Family::betti_x1:
		for (int n = 1; n <= N; ++n) s.apply_factor(n, -1);
		s.apply_factor(1, -1);
		s.apply_factor(2, -1);
		s.apply_polynomial({{2, 0}});
		return s;

	case Family::betti_x2:
		for (int n = 1; n <= N; ++n) s.apply_factor(n, -1);
		s.apply_factor(1, -1);
		s.apply_factor(2, -1);
		s.apply_polynomial({{2, 0}, {-1, 1}});
		return s;

	case Family::betti_x3:
		for (int n = 1; n <= N; ++n) s.apply_factor(n, -1);
		s.apply_factor(1, -1);
		s.apply_factor(2, -1);
		return s;

	case Family::betti_x4:
		for (int n = 1; n <= N; ++n) s.apply_factor(n, -1);
		for (int j = 1; j <= spec.m; ++j) s.apply_factor(j, -1);
		return s;
	}
	throw std::invalid_argument("unknown family");
}

} // namespace qdist
