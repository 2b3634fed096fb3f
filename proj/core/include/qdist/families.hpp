#pragma once

#include "qdist/residue_series.hpp"
#include "qdist/uni_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdist {

/* The ten generating-function families handled by the toolkit. For each,
 * the residue-class series tracks the named statistic (or homology degree)
 * in the group-ring variable t and the weight in q. */
enum class Family {
	rank,	       // partitions by Dyson rank
	crank,	       // partitions by Andrews-Garvan crank (product definition)
	residual_crank, // overpartitions by first residual crank
	pp_trace,      // plane partitions by trace
	betti_x1,      // three-step flag Hilbert scheme Hilb^{n,n+1,n+2}(0)
	betti_x2,      // two-step flag Hilbert scheme Hilb^{n,n+2}(0)
	betti_x3,      // trivially-related locus of Hilb^{n,n+2}(C^2)
	betti_x4,      // perverse coherent sheaf moduli, extra parameter m
	goettsche_cells // cells of Hilb_n(spec k[[x,y]]/m^n) by dimension
};

struct FamilySpec {
	Family family;
	int modulus;
	int m = 1; // only read for betti_x4

	bool is_betti() const
	{
		return family == Family::betti_x1 || family == Family::betti_x2 ||
		       family == Family::betti_x3 || family == Family::betti_x4;
	}
};

/* Kebab-case names used by the CLI and file formats. */
const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
const std::vector<std::string>& family_names();

/* Validates modulus >= 2 and m >= 1 (betti-x4); throws std::invalid_argument. */
void validate(const FamilySpec& spec);

/* F_1(t;q) = prod_{n>=1} (1 - t q^n), truncated at q^N. */
ResidueClassSeries f1_series(int modulus, int truncation);

/* F_3(t;q) = prod_{n>=1} (1 - t^{n-1} q^n), truncated at q^N. */
ResidueClassSeries f3_series(int modulus, int truncation);

/* The family's bivariate generating function expanded to q^N with
 * t-exponents reduced mod b. coefficient(n, a) is the exact count of
 * objects of weight n whose statistic is congruent to a mod b. */
ResidueClassSeries family_series(const FamilySpec& spec, int truncation);

/* The t -> 1 specialization expanded by an independent univariate product
 * path (never through the group ring); used by conservation checks. */
UniSeries family_total_series(const FamilySpec& spec, int truncation);

} // namespace qdist
