#include "qdist/errors.hpp"
#include "qdist/experiments.hpp"
#include "qdist/families.hpp"
#include "qdist/identities.hpp"
#include "qdist/oracles.hpp"
#include "qdist/residue_series.hpp"
#include "qdist/wright.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace qdist;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

/* Hard ceiling on expansion orders; above this the quadratic folds stop
 * being desk-scale. */
constexpr long kLimitCap = 20000;

struct CommonOptions {
	std::string family;
	int modulus = 0;
	int residue = 0;
	long limit = 500;
	int m = 1;
	std::string format = "csv";
	std::string output;
	int threads = 0;
};

FamilySpec parse_spec(const CommonOptions& opt)
{
	auto family = family_from_name(opt.family);
	if (!family) {
		std::ostringstream os;
		os << "unknown family '" << opt.family << "'; valid names:";
		for (const auto& name : family_names()) os << ' ' << name;
		throw CLI::ValidationError(os.str());
	}
	FamilySpec spec{*family, opt.modulus, opt.m};
	validate(spec);
	return spec;
}

void check_limit(long limit)
{
	if (limit < 0)
		throw CLI::ValidationError("limit must be >= 0");
	if (limit > kLimitCap)
		throw capacity_error("limit exceeds the expansion cap");
}

/* All writers print to a stream so outputs are byte-identical regardless
 * of destination. */
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn)
{
	if (path.empty()) {
		fn(std::cout);
		return kExitOk;
	}
	std::ofstream os(path, std::ios::binary);
	if (!os) {
		std::cerr << "error: cannot open output file " << path << "\n";
		return kExitUsage;
	}
	fn(os);
	return kExitOk;
}

int cmd_expand(const CommonOptions& opt)
{
	FamilySpec spec = parse_spec(opt);
	check_limit(opt.limit);
	ResidueClassSeries series =
		family_series(spec, static_cast<int>(opt.limit));

	return with_output(opt.output, [&](std::ostream& os) {
		if (opt.format == "json") {
			json j;
			j["schema_version"] = 1;
			j["command"] = "expand";
			j["family"] = family_name(spec.family);
			j["modulus"] = spec.modulus;
			if (spec.family == Family::betti_x4) j["m"] = spec.m;
			j["limit"] = opt.limit;
			json rows = json::array();
			for (int n = 0; n <= series.truncation(); ++n) {
				json row;
				row["n"] = n;
				json counts = json::array();
				for (int r = 0; r < spec.modulus; ++r)
					counts.push_back(
						series.coefficient(n, r).get_str());
				row["counts"] = counts;
				row["total"] = series.row_sum(n).get_str();
				rows.push_back(std::move(row));
			}
			j["rows"] = std::move(rows);
			os << j.dump(2) << '\n';
		} else {
			series.write_csv(os);
		}
	});
}

struct OracleMismatch {
	std::string family;
	int b = 0;
	int a = 0;
	long n = 0;
	std::string expected;
	std::string actual;
};

int cmd_oracle(const CommonOptions& opt, long rank_limit, long pp_limit,
	       long residual_limit, int rank_b_max, int pp_b_max,
	       int residual_b_max, const oracles::Guards& guards)
{
	std::vector<OracleMismatch> mismatches;
	long checked = 0;

	auto compare = [&](Family family, int b_max, long n_lo, long n_hi) {
		FamilySpec spec{family, 2, 1};
		for (int b = 2; b <= b_max; ++b) {
			spec.modulus = b;
			ResidueClassSeries series =
				family_series(spec, static_cast<int>(n_hi));
			for (long n = n_lo; n <= n_hi; ++n) {
				for (int a = 0; a < b; ++a) {
					mpz_class want = oracles::count_statistic(
						family, a, b, static_cast<int>(n),
						guards);
					const mpz_class& got = series.coefficient(
						static_cast<int>(n), a);
					++checked;
					if (want != got)
						mismatches.push_back(
							{family_name(family), b, a,
							 n, want.get_str(),
							 got.get_str()});
				}
			}
		}
	};

	std::cerr << "notice: crank at n = 1 is defined by the product "
		     "(coefficients t + t^-1 - 1) and is exempt from the "
		     "enumeration comparison\n";

	compare(Family::rank, rank_b_max, 0, rank_limit);
	compare(Family::crank, rank_b_max, 2, rank_limit);
	compare(Family::pp_trace, pp_b_max, 0, pp_limit);
	compare(Family::residual_crank, residual_b_max, 0, residual_limit);

	int rc = mismatches.empty() ? kExitOk : kExitCheckFailure;
	with_output(opt.output, [&](std::ostream& os) {
		if (opt.format == "json") {
			json j;
			j["schema_version"] = 1;
			j["command"] = "oracle";
			j["checked"] = checked;
			json mm = json::array();
			for (const auto& m : mismatches)
				mm.push_back({{"family", m.family},
					      {"modulus", m.b},
					      {"residue", m.a},
					      {"n", m.n},
					      {"oracle", m.expected},
					      {"series", m.actual}});
			j["mismatches"] = std::move(mm);
			j["pass"] = mismatches.empty();
			os << j.dump(2) << '\n';
		} else {
			os << "family,modulus,residue,n,oracle,series\n";
			for (const auto& m : mismatches)
				os << m.family << ',' << m.b << ',' << m.a << ','
				   << m.n << ',' << m.expected << ','
				   << m.actual << '\n';
			os << "# checked " << checked << " values, "
			   << mismatches.size() << " mismatches\n";
		}
	});
	return rc;
}

int cmd_asym(const CommonOptions& opt, std::vector<long> samples, int terms,
	     const std::string& variant)
{
	FamilySpec spec = parse_spec(opt);
	for (long n : samples) check_limit(n);

	wright::PPExponentVariant pp_variant =
		variant == "printed" ? wright::PPExponentVariant::as_printed
				     : wright::PPExponentVariant::classical;
	auto rows = experiments::asym_vs_exact(spec, opt.residue, samples,
					       terms, pp_variant);
	return with_output(opt.output, [&](std::ostream& os) {
		if (opt.format == "json")
			experiments::write_json(os, rows, spec, opt.residue);
		else
			experiments::write_csv(os, rows, spec, opt.residue);
	});
}

int cmd_scan(const CommonOptions& opt, const std::string& kind, long n_min,
	     long n_max)
{
	FamilySpec spec = parse_spec(opt);
	check_limit(n_max + 1);

	experiments::ScanResult result;
	if (kind == "convexity")
		result = experiments::convexity_scan(spec, opt.residue, n_min,
						     n_max, opt.threads);
	else
		result = experiments::logconcavity_scan(spec, opt.residue,
							n_min, n_max,
							opt.threads);
	return with_output(opt.output, [&](std::ostream& os) {
		if (opt.format == "csv")
			experiments::write_csv(os, result, spec);
		else
			experiments::write_json(os, result, spec);
	});
}

int cmd_identities(const CommonOptions& opt, int b_max, double tolerance)
{
	auto checks = identities::run_suite(b_max, tolerance);
	bool pass = identities::all_pass(checks);

	with_output(opt.output, [&](std::ostream& os) {
		if (opt.format == "json") {
			json j;
			j["schema_version"] = 1;
			j["command"] = "identities";
			j["tolerance"] = tolerance;
			j["max_modulus"] = b_max;
			json rows = json::array();
			for (const auto& c : checks)
				rows.push_back(
					{{"name", c.name},
					 {"detail", c.detail},
					 {"residual", c.residual},
					 {"bound", c.bound},
					 {"status",
					  c.informational
						  ? "info"
						  : (c.pass ? "pass" : "fail")}});
			j["checks"] = std::move(rows);
			j["pass"] = pass;
			os << j.dump(2) << '\n';
		} else {
			os << "name,detail,residual,bound,status\n";
			for (const auto& c : checks)
				os << c.name << ',' << c.detail << ','
				   << experiments::format_double(c.residual)
				   << ','
				   << experiments::format_double(c.bound) << ','
				   << (c.informational
					       ? "info"
					       : (c.pass ? "pass" : "fail"))
				   << '\n';
		}
	});
	return pass ? kExitOk : kExitCheckFailure;
}

int cmd_arcs(const CommonOptions& opt, std::vector<double> xs,
	     double cone_slope, double theta)
{
	FamilySpec spec = parse_spec(opt);
	auto rows = experiments::arc_dominance_probe(spec, xs, cone_slope, theta);
	return with_output(opt.output, [&](std::ostream& os) {
		if (opt.format == "json")
			experiments::write_json(os, rows, spec);
		else
			experiments::write_csv(os, rows, spec);
	});
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"qdist: exact residue-class q-series expansion and "
		     "circle-method asymptotics"};
	app.require_subcommand(1);

	CommonOptions opt;

	auto add_common = [&](CLI::App* cmd, bool needs_family) {
		if (needs_family) {
			cmd->add_option("--family", opt.family,
					"family name (rank, crank, residual-crank, "
					"pp-trace, betti-x1..betti-x4, goettsche-cells)")
				->required();
			cmd->add_option("--modulus", opt.modulus,
					"progression modulus b >= 2")
				->required();
			cmd->add_option("--m", opt.m,
					"extra factor count for betti-x4");
		}
		cmd->add_option("--format", opt.format, "output format")
			->check(CLI::IsMember({"csv", "json"}));
		cmd->add_option("--output", opt.output, "output file (default stdout)");
		cmd->add_option("--threads", opt.threads,
				"worker threads (0 = QDIST_THREADS or hardware)");
	};

	auto* expand = app.add_subcommand(
		"expand", "expand a family to q^N and emit the residue table");
	add_common(expand, true);
	expand->add_option("--limit", opt.limit, "truncation order N");

	auto* oracle = app.add_subcommand(
		"oracle",
		"compare series counts against brute-force enumeration");
	add_common(oracle, false);
	long rank_limit = 30, pp_limit = 20, residual_limit = 30;
	int rank_b_max = 7, pp_b_max = 5, residual_b_max = 5;
	oracle->add_option("--rank-limit", rank_limit,
			   "n ceiling for rank/crank comparisons");
	oracle->add_option("--pp-limit", pp_limit, "n ceiling for pp-trace");
	oracle->add_option("--residual-limit", residual_limit,
			   "n ceiling for residual-crank");
	oracle->add_option("--rank-modulus-max", rank_b_max, "b ceiling for rank/crank");
	oracle->add_option("--pp-modulus-max", pp_b_max, "b ceiling for pp-trace");
	oracle->add_option("--residual-modulus-max", residual_b_max,
			   "b ceiling for residual-crank");
	oracles::Guards guards;
	oracle->add_option("--partition-guard", guards.partitions,
			   "enumeration ceiling for partitions");
	oracle->add_option("--overpartition-guard", guards.overpartitions,
			   "enumeration ceiling for overpartitions");
	oracle->add_option("--pp-guard", guards.plane_partitions,
			   "enumeration ceiling for plane partitions");

	auto* asym = app.add_subcommand(
		"asym", "exact counts against the circle-method main term");
	add_common(asym, true);
	std::vector<long> samples = {500, 1000, 2000};
	int terms = 1;
	std::string variant = "classical";
	asym->add_option("--residue", opt.residue, "residue class a")->required();
	asym->add_option("--samples", samples, "sample indices n")
		->delimiter(',');
	asym->add_option("--terms", terms, "expansion terms R");
	asym->add_option("--variant", variant,
			 "plane-partition exponent variant")
		->check(CLI::IsMember({"classical", "printed"}));

	auto* scan = app.add_subcommand(
		"scan", "exhaustive convexity / log-concavity scan");
	add_common(scan, true);
	std::string kind = "convexity";
	long n_min = 0, n_max = 0;
	scan->add_option("--residue", opt.residue, "residue class a")->required();
	scan->add_option("--kind", kind, "inequality to scan")
		->check(CLI::IsMember({"convexity", "log-concavity"}));
	scan->add_option("--min", n_min, "window lower end")->required();
	scan->add_option("--max", n_max, "window upper end")->required();

	auto* identities_cmd = app.add_subcommand(
		"identities", "run the analytic identity suite");
	add_common(identities_cmd, false);
	int b_max = 12;
	double tolerance = 1e-10;
	identities_cmd->add_option("--max-modulus", b_max, "largest modulus");
	identities_cmd->add_option("--tolerance", tolerance, "pass threshold");

	auto* arcs = app.add_subcommand(
		"arcs", "major/minor arc dominance ratios");
	add_common(arcs, true);
	std::vector<double> xs = {0.2, 0.1, 0.05};
	double cone_slope = 1.0, theta = 1.0;
	arcs->add_option("--x-samples", xs, "Re(z) samples")->delimiter(',');
	arcs->add_option("--cone-slope", cone_slope, "major-arc slope M");
	arcs->add_option("--theta", theta, "D_theta half-angle (radians)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? kExitOk : kExitUsage;
	}

	/* Scan results are JSON unless csv is asked for explicitly. */
	if (app.got_subcommand(scan) && scan->get_option("--format")->count() == 0)
		opt.format = "json";

	try {
		if (app.got_subcommand(expand)) return cmd_expand(opt);
		if (app.got_subcommand(oracle))
			return cmd_oracle(opt, rank_limit, pp_limit,
					  residual_limit, rank_b_max, pp_b_max,
					  residual_b_max, guards);
		if (app.got_subcommand(asym))
			return cmd_asym(opt, samples, terms, variant);
		if (app.got_subcommand(scan))
			return cmd_scan(opt, kind, n_min, n_max);
		if (app.got_subcommand(identities_cmd))
			return cmd_identities(opt, b_max, tolerance);
		if (app.got_subcommand(arcs))
			return cmd_arcs(opt, xs, cone_slope, theta);
	} catch (const capacity_error& e) {
		std::cerr << "capacity error: " << e.what() << "\n";
		return kExitCapacity;
	} catch (const CLI::ValidationError& e) {
		std::cerr << "usage error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const std::exception& e) {
		std::cerr << "usage error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
