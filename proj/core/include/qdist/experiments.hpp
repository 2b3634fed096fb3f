#pragma once

#include "qdist/families.hpp"
#include "qdist/wright.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdist {
namespace experiments {

/* Exact per-class counts with the sup-norm deviation from perfect
 * equidistribution, sup_a |b c(a,b;n)/c(n) - 1|. Betti families measure
 * against d(a,b) c(n) instead and skip the identically-zero classes.
 * Deviations are exact rationals; the reports render them as decimals. */
struct EquidistRow {
	long n = 0;
	std::vector<mpz_class> counts;
	mpz_class total;
	mpq_class deviation;
};

struct EquidistReport {
	FamilySpec spec;
	std::vector<EquidistRow> rows;
};

EquidistReport equidist_table(const FamilySpec& spec, int truncation,
			      int threads = 0);

enum class ScanKind { convexity, log_concavity };

/* Convexity counterexample (n1, n2); log-concavity counterexamples are
 * centered triples reported as n1 = n2 = n. */
struct ScanViolation {
	long n1 = 0;
	long n2 = 0;
};

struct ScanResult {
	ScanKind kind = ScanKind::convexity;
	long n_min = 0;
	long n_max = 0;
	int residue = 0;
	std::vector<ScanViolation> violations;
	/* Least bound T such that the window above T is violation-free;
	 * empty when no such bound fits inside the window. */
	std::optional<long> threshold;
};

/* Exhaustive exact check of c(a,b;n1) c(a,b;n2) > c(a,b;n1+n2) over
 * pairs with n_min <= n1 <= n2 and n1 + n2 <= n_max. */
ScanResult convexity_scan(const FamilySpec& spec, int a, long n_min,
			  long n_max, int threads = 0);

/* Exhaustive exact check of c(n)^2 >= c(n-1) c(n+1) for n in
 * [max(n_min,1), n_max]; the series is expanded to n_max + 1. */
ScanResult logconcavity_scan(const FamilySpec& spec, int a, long n_min,
			     long n_max, int threads = 0);

struct AsymRow {
	long n = 0;
	mpz_class exact;
	double estimate = 0.0;
	double ratio = 0.0; // exact / estimate; 1 when both vanish
};

/* Exact counts against the Wright main term with R expansion terms
 * (pp-trace routes through pp_asymptotic with the chosen exponent). */
std::vector<AsymRow> asym_vs_exact(
	const FamilySpec& spec, int a, const std::vector<long>& ns, int R,
	wright::PPExponentVariant pp_variant = wright::PPExponentVariant::classical);

struct ArcProbeRow {
	double x = 0.0;
	double y = 0.0;
	int j = 0;
	double log_ratio = 0.0; // log(|H(zeta^j)| / |H(1)|)
	double ratio = 0.0;	// exp(log_ratio), may underflow to 0
	std::string arc;	// "major" or "minor"
};

/* Samples |H(zeta_b^j;e^{-z})| / |H(1;e^{-z})| on the major arc
 * (y = 0 and y = M x/2) and the minor arc (y = 2 M x and y near pi) for
 * every j. Majors must trend to 0 as x decreases; minors stay bounded. */
std::vector<ArcProbeRow> arc_dominance_probe(const FamilySpec& spec,
					     const std::vector<double>& xs,
					     double cone_slope, double theta);

/* Deterministic serialization; doubles use shortest round-trip decimals,
 * big integers decimal strings. JSON records carry schema_version 1. */
void write_csv(std::ostream& os, const EquidistReport& report);
void write_json(std::ostream& os, const EquidistReport& report);
void write_csv(std::ostream& os, const ScanResult& result, const FamilySpec& spec);
void write_json(std::ostream& os, const ScanResult& result, const FamilySpec& spec);
void write_csv(std::ostream& os, const std::vector<AsymRow>& rows,
	       const FamilySpec& spec, int a);
void write_json(std::ostream& os, const std::vector<AsymRow>& rows,
		const FamilySpec& spec, int a);
void write_csv(std::ostream& os, const std::vector<ArcProbeRow>& rows,
	       const FamilySpec& spec);
void write_json(std::ostream& os, const std::vector<ArcProbeRow>& rows,
		const FamilySpec& spec);

/* Locale-independent shortest-round-trip formatting for doubles. */
std::string format_double(double value);

} // namespace experiments
} // namespace qdist
