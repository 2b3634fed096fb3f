#include "qdist/experiments.hpp"

#include "qdist/errors.hpp"
#include "qdist/parallel.hpp"
#include "qdist/qproducts.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qdist {
namespace experiments {

namespace {

using json = nlohmann::ordered_json;

json json_header(const char* command)
{
	json j;
	j["schema_version"] = 1;
	j["command"] = command;
	return j;
}

json spec_json(const FamilySpec& spec)
{
	json j;
	j["family"] = family_name(spec.family);
	j["modulus"] = spec.modulus;
	if (spec.family == Family::betti_x4) j["m"] = spec.m;
	return j;
}

double finite_or_lowest(double v)
{
	return std::isfinite(v) ? v : std::numeric_limits<double>::lowest();
}

} // namespace

std::string format_double(double value)
{
	char buf[64];
	auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
	if (ec != std::errc())
		return "nan";
	return std::string(buf, ptr);
}

EquidistReport equidist_table(const FamilySpec& spec, int truncation,
			      int threads)
{
	validate(spec);
	ResidueClassSeries series = family_series(spec, truncation);

	const int b = spec.modulus;
	const bool betti_even = spec.is_betti() && b % 2 == 0;

	/* Per-class mass target: 1/b in general, d(a,b) for Betti families
	 * (zero classes skipped). inv_density is 1/d as an exact rational. */
	mpq_class inv_density = betti_even ? mpq_class(b, 2) : mpq_class(b);

	EquidistReport report;
	report.spec = spec;
	report.rows.resize(static_cast<std::size_t>(truncation) + 1);

	parallel_for(static_cast<std::size_t>(truncation) + 1, threads,
		     [&](std::size_t idx) {
		int n = static_cast<int>(idx);
		EquidistRow& row = report.rows[idx];
		row.n = n;
		row.counts.resize(static_cast<std::size_t>(b));
		for (int r = 0; r < b; ++r)
			row.counts[r] = series.coefficient(n, r);
		row.total = series.row_sum(n);
		row.deviation = 0;
		if (row.total == 0) return;
		for (int a = 0; a < b; ++a) {
			if (betti_even && a % 2 == 1) continue;
			mpq_class dev = mpq_class(row.counts[a]) * inv_density -
					row.total;
			dev /= row.total;
			if (dev < 0) dev = -dev;
			if (dev > row.deviation) row.deviation = dev;
		}
	});
	return report;
}

ScanResult convexity_scan(const FamilySpec& spec, int a, long n_min,
			  long n_max, int threads)
{
	validate(spec);
	if (a < 0 || a >= spec.modulus)
		throw std::invalid_argument("residue out of range");

	ScanResult result;
	if (n_min < 0) throw std::invalid_argument("window must be >= 0");

	result.kind = ScanKind::convexity;
	result.n_min = n_min;
	result.n_max = n_max;
	result.residue = a;
	if (n_min > n_max || 2 * n_min > n_max) {
		/* No admissible pairs; empty result, threshold not found. */
		return result;
	}

	ResidueClassSeries series =
		family_series(spec, static_cast<int>(n_max));

	/* Pairs n_min <= n1 <= n2, n1 + n2 <= n_max, partitioned by n1. */
	const long count = n_max / 2 - n_min + 1;
	std::vector<std::vector<ScanViolation>> found(
		static_cast<std::size_t>(count));
	parallel_for(static_cast<std::size_t>(count), threads,
		     [&](std::size_t idx) {
		long n1 = n_min + static_cast<long>(idx);
		const mpz_class& c1 =
			series.coefficient(static_cast<int>(n1), a);
		mpz_class product;
		for (long n2 = n1; n1 + n2 <= n_max; ++n2) {
			product = c1 * series.coefficient(static_cast<int>(n2), a);
			if (product <=
			    series.coefficient(static_cast<int>(n1 + n2), a))
				found[idx].push_back({n1, n2});
		}
	});
	for (const auto& chunk : found)
		result.violations.insert(result.violations.end(), chunk.begin(),
					 chunk.end());

	if (result.violations.empty()) {
		result.threshold = n_min;
	} else {
		long worst = 0;
		for (const auto& v : result.violations)
			worst = std::max(worst, std::min(v.n1, v.n2));
		if (2 * (worst + 1) <= n_max) result.threshold = worst + 1;
	}
	return result;
}

ScanResult logconcavity_scan(const FamilySpec& spec, int a, long n_min,
			     long n_max, int threads)
{
	validate(spec);
	if (a < 0 || a >= spec.modulus)
		throw std::invalid_argument("residue out of range");

	ScanResult result;
	result.kind = ScanKind::log_concavity;
	result.n_min = n_min;
	result.n_max = n_max;
	result.residue = a;
	long lo = std::max(n_min, 1L);
	if (lo > n_max || n_max < 1) return result;

	ResidueClassSeries series =
		family_series(spec, static_cast<int>(n_max) + 1);

	const long count = n_max - lo + 1;
	std::vector<char> bad(static_cast<std::size_t>(count), 0);
	parallel_for(static_cast<std::size_t>(count), threads,
		     [&](std::size_t idx) {
		long n = lo + static_cast<long>(idx);
		mpz_class lhs = series.coefficient(static_cast<int>(n), a);
		lhs *= lhs;
		mpz_class rhs = series.coefficient(static_cast<int>(n - 1), a) *
				series.coefficient(static_cast<int>(n + 1), a);
		if (lhs < rhs) bad[idx] = 1;
	});
	for (long idx = 0; idx < count; ++idx)
		if (bad[idx])
			result.violations.push_back({lo + idx, lo + idx});

	if (result.violations.empty()) {
		result.threshold = lo;
	} else {
		long worst = result.violations.back().n1;
		if (worst + 1 <= n_max) result.threshold = worst + 1;
	}
	return result;
}

std::vector<AsymRow> asym_vs_exact(const FamilySpec& spec, int a,
				   const std::vector<long>& ns, int R,
				   wright::PPExponentVariant pp_variant)
{
	validate(spec);
	if (a < 0 || a >= spec.modulus)
		throw std::invalid_argument("residue out of range");
	if (ns.empty()) return {};

	long n_top = *std::max_element(ns.begin(), ns.end());
	ResidueClassSeries series =
		family_series(spec, static_cast<int>(n_top));

	std::vector<AsymRow> rows;
	rows.reserve(ns.size());
	for (long n : ns) {
		if (n < 1) throw std::invalid_argument("sample n must be >= 1");
		AsymRow row;
		row.n = n;
		row.exact = series.coefficient(static_cast<int>(n), a);
		if (spec.family == Family::pp_trace)
			row.estimate = wright::pp_asymptotic(n, pp_variant) /
				       spec.modulus;
		else
			row.estimate = wright::wright_main(
					       wright::family_wright_params(spec, a),
					       n, R)
					       .value;
		if (row.estimate == 0.0 && row.exact == 0)
			row.ratio = 1.0;
		else
			row.ratio = row.exact.get_d() / row.estimate;
		rows.push_back(std::move(row));
	}
	return rows;
}

std::vector<ArcProbeRow> arc_dominance_probe(const FamilySpec& spec,
					     const std::vector<double>& xs,
					     double cone_slope, double theta)
{
	validate(spec);
	if (!(cone_slope > 0.0))
		throw std::invalid_argument("cone slope must be > 0");
	if (!(theta > 0.0) || theta >= std::numbers::pi / 2)
		throw std::invalid_argument("theta must lie in (0, pi/2)");

	const int b = spec.modulus;
	std::vector<ArcProbeRow> rows;

	for (double x : xs) {
		if (!(x > 0.0))
			throw std::invalid_argument("x samples must be > 0");
		/* Two major-arc samples inside both the cone |y| <= M x and
		 * D_theta, two minor-arc samples (one near the real-axis
		 * cone boundary, one near y = pi). */
		double y_major = 0.5 * x * std::min(cone_slope, std::tan(theta));
		struct Sample {
			double y;
			const char* arc;
		};
		const Sample samples[4] = {
			{0.0, "major"},
			{y_major, "major"},
			{2.0 * cone_slope * x, "minor"},
			{0.98 * std::numbers::pi, "minor"},
		};
		for (const auto& s : samples) {
			std::complex<double> z(x, s.y);
			double base = qp::family_h_log(spec, 0, z).real();
			for (int j = 0; j < b; ++j) {
				ArcProbeRow row;
				row.x = x;
				row.y = s.y;
				row.j = j;
				row.arc = s.arc;
				double lr = j == 0
						    ? 0.0
						    : qp::family_h_log(spec, j, z)
								      .real() -
							      base;
				row.log_ratio = finite_or_lowest(lr);
				row.ratio = std::exp(row.log_ratio);
				rows.push_back(row);
			}
		}
	}
	return rows;
}

void write_csv(std::ostream& os, const EquidistReport& report)
{
	const int b = report.spec.modulus;
	os << "n";
	for (int r = 0; r < b; ++r) os << ",r" << r;
	os << ",total,deviation\n";
	for (const auto& row : report.rows) {
		os << row.n;
		for (const auto& c : row.counts) os << ',' << c.get_str();
		os << ',' << row.total.get_str() << ','
		   << format_double(row.deviation.get_d()) << '\n';
	}
}

void write_json(std::ostream& os, const EquidistReport& report)
{
	json j = json_header("equidist");
	j.update(spec_json(report.spec));
	json rows = json::array();
	for (const auto& row : report.rows) {
		json r;
		r["n"] = row.n;
		json counts = json::array();
		for (const auto& c : row.counts) counts.push_back(c.get_str());
		r["counts"] = counts;
		r["total"] = row.total.get_str();
		r["deviation"] = row.deviation.get_d();
		rows.push_back(std::move(r));
	}
	j["rows"] = std::move(rows);
	os << j.dump(2) << '\n';
}

namespace {

const char* scan_kind_name(ScanKind kind)
{
	return kind == ScanKind::convexity ? "convexity" : "log-concavity";
}

} // namespace

void write_csv(std::ostream& os, const ScanResult& result,
	       const FamilySpec& spec)
{
	os << "family,modulus,residue,kind,window_min,window_max,threshold,n1,n2\n";
	auto prefix = [&]() -> std::ostream& {
		os << family_name(spec.family) << ',' << spec.modulus << ','
		   << result.residue << ',' << scan_kind_name(result.kind)
		   << ',' << result.n_min << ',' << result.n_max << ',';
		if (result.threshold)
			os << *result.threshold;
		return os;
	};
	if (result.violations.empty()) {
		prefix() << ",,\n";
		return;
	}
	for (const auto& v : result.violations)
		prefix() << ',' << v.n1 << ',' << v.n2 << '\n';
}

void write_json(std::ostream& os, const ScanResult& result,
		const FamilySpec& spec)
{
	json j = json_header("scan");
	j.update(spec_json(spec));
	j["residue"] = result.residue;
	j["kind"] = scan_kind_name(result.kind);
	j["window"] = {{"min", result.n_min}, {"max", result.n_max}};
	json violations = json::array();
	for (const auto& v : result.violations) {
		if (result.kind == ScanKind::convexity)
			violations.push_back({{"n1", v.n1}, {"n2", v.n2}});
		else
			violations.push_back({{"n", v.n1}});
	}
	j["violations"] = std::move(violations);
	if (result.threshold)
		j["threshold"] = *result.threshold;
	else
		j["threshold"] = nullptr;
	os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const std::vector<AsymRow>& rows,
	       const FamilySpec& spec, int a)
{
	(void)spec;
	(void)a;
	os << "n,exact,estimate,ratio\n";
	for (const auto& row : rows)
		os << row.n << ',' << row.exact.get_str() << ','
		   << format_double(row.estimate) << ','
		   << format_double(row.ratio) << '\n';
}

void write_json(std::ostream& os, const std::vector<AsymRow>& rows,
		const FamilySpec& spec, int a)
{
	json j = json_header("asym");
	j.update(spec_json(spec));
	j["residue"] = a;
	json out = json::array();
	for (const auto& row : rows) {
		json r;
		r["n"] = row.n;
		r["exact"] = row.exact.get_str();
		r["estimate"] = row.estimate;
		r["ratio"] = row.ratio;
		out.push_back(std::move(r));
	}
	j["rows"] = std::move(out);
	os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const std::vector<ArcProbeRow>& rows,
	       const FamilySpec& spec)
{
	(void)spec;
	os << "x,y,j,arc,log_ratio,ratio\n";
	for (const auto& row : rows)
		os << format_double(row.x) << ',' << format_double(row.y) << ','
		   << row.j << ',' << row.arc << ','
		   << format_double(row.log_ratio) << ','
		   << format_double(row.ratio) << '\n';
}

void write_json(std::ostream& os, const std::vector<ArcProbeRow>& rows,
		const FamilySpec& spec)
{
	json j = json_header("arcs");
	j.update(spec_json(spec));
	json out = json::array();
	for (const auto& row : rows) {
		json r;
		r["x"] = row.x;
		r["y"] = row.y;
		r["j"] = row.j;
		r["arc"] = row.arc;
		r["log_ratio"] = row.log_ratio;
		r["ratio"] = row.ratio;
		out.push_back(std::move(r));
	}
	j["rows"] = std::move(out);
	os << j.dump(2) << '\n';
}

} // namespace experiments
} // namespace qdist
