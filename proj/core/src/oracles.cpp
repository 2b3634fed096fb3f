#include "qdist/oracles.hpp"

#include "qdist/errors.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qdist {
namespace oracles {

namespace {

void partition_rec(int remaining, int max_part, Parts& parts,
		   const std::function<void(const Parts&)>& fn)
{
	if (remaining == 0) {
		fn(parts);
		return;
	}
	for (int p = std::min(max_part, remaining); p >= 1; --p) {
		parts.push_back(p);
		partition_rec(remaining - p, p, parts, fn);
		parts.pop_back();
	}
}

} // namespace

void for_each_partition(int n, const std::function<void(const Parts&)>& fn,
			const Guards& guards)
{
	if (n < 0) throw std::invalid_argument("n must be >= 0");
	if (n > guards.partitions)
		throw capacity_error("partition enumeration guard exceeded");
	Parts parts;
	partition_rec(n, n == 0 ? 1 : n, parts, fn);
}

int rank_of(const Parts& parts)
{
	if (parts.empty()) return 0;
	return parts.front() - static_cast<int>(parts.size());
}

int crank_of(const Parts& parts)
{
	if (parts.empty()) return 0;
	int ones = 0;
	for (int p : parts)
		if (p == 1) ++ones;
	if (ones == 0) return parts.front();
	int mu = 0;
	for (int p : parts)
		if (p > ones) ++mu;
	return mu - ones;
}

void for_each_overpartition(int n,
			    const std::function<void(const Overpartition&)>& fn,
			    const Guards& guards)
{
	if (n < 0) throw std::invalid_argument("n must be >= 0");
	if (n > guards.overpartitions)
		throw capacity_error("overpartition enumeration guard exceeded");

	Guards inner = guards;
	inner.partitions = std::max(inner.partitions, n);
	for_each_partition(n, [&](const Parts& parts) {
		/* First occurrence of each distinct value may carry a flag;
		 * walk all subsets of the distinct positions. */
		std::vector<int> firsts;
		for (std::size_t i = 0; i < parts.size(); ++i)
			if (i == 0 || parts[i] != parts[i - 1])
				firsts.push_back(static_cast<int>(i));

		Overpartition over;
		over.parts = parts;
		over.overlined.assign(parts.size(), 0);
		const std::size_t subsets = std::size_t{1} << firsts.size();
		for (std::size_t mask = 0; mask < subsets; ++mask) {
			for (std::size_t k = 0; k < firsts.size(); ++k)
				over.overlined[firsts[k]] =
					(mask >> k) & 1 ? 1 : 0;
			fn(over);
		}
	}, inner);
}

namespace {

/* Rows are generated top to bottom; each candidate row is dominated
 * entrywise by the previous one, which enforces column monotonicity.
 * A plane partition is emitted whenever the remaining budget hits zero. */
struct PlaneEnumerator {
	const std::function<void(const PlaneRows&)>& fn;
	PlaneRows rows;

	explicit PlaneEnumerator(const std::function<void(const PlaneRows&)>& f)
		: fn(f)
	{
	}

	void next_rows(const std::vector<int>& prev, int remaining)
	{
		std::vector<int> row;
		build_row(prev, row, 0, remaining);
	}

	/* Extends `row` at column `col`, capped by prev[col] and the entry
	 * to the left, then either closes the row or keeps going. */
	void build_row(const std::vector<int>& prev, std::vector<int>& row,
		       std::size_t col, int remaining)
	{
		if (!row.empty()) {
			rows.push_back(row);
			if (remaining == 0)
				fn(rows);
			else
				next_rows(row, remaining);
			rows.pop_back();
		}
		if (col >= prev.size() || remaining == 0) return;
		int cap = std::min(prev[col], remaining);
		if (col > 0) cap = std::min(cap, row[col - 1]);
		for (int v = cap; v >= 1; --v) {
			row.push_back(v);
			build_row(prev, row, col + 1, remaining - v);
			row.pop_back();
		}
	}
};

} // namespace

void for_each_plane_partition(int n,
			      const std::function<void(const PlaneRows&)>& fn,
			      const Guards& guards)
{
	if (n < 0) throw std::invalid_argument("n must be >= 0");
	if (n > guards.plane_partitions)
		throw capacity_error("plane partition enumeration guard exceeded");
	if (n == 0) {
		PlaneRows empty;
		fn(empty);
		return;
	}
	PlaneEnumerator enumerator(fn);
	std::vector<int> top(static_cast<std::size_t>(n), n);
	enumerator.next_rows(top, n);
}

int trace_of(const PlaneRows& rows)
{
	int trace = 0;
	for (std::size_t j = 0; j < rows.size(); ++j)
		if (j < rows[j].size()) trace += rows[j][j];
	return trace;
}

namespace {

std::mutex p_table_mutex;
std::vector<mpz_class> p_table = {1};

void extend_p_table(int n_max)
{
	for (int n = static_cast<int>(p_table.size()); n <= n_max; ++n) {
		mpz_class value = 0;
		/* p(n) = sum_{k!=0} (-1)^{k+1} p(n - k(3k-1)/2). */
		for (int k = 1;; ++k) {
			long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
			long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
			if (g1 > n && g2 > n) break;
			int sign = (k % 2 == 1) ? 1 : -1;
			if (g1 <= n) {
				if (sign > 0)
					value += p_table[n - g1];
				else
					value -= p_table[n - g1];
			}
			if (g2 <= n) {
				if (sign > 0)
					value += p_table[n - g2];
				else
					value -= p_table[n - g2];
			}
		}
		p_table.push_back(value);
	}
}

} // namespace

mpz_class pentagonal_p(int n)
{
	if (n < 0) throw std::invalid_argument("n must be >= 0");
	std::lock_guard<std::mutex> lock(p_table_mutex);
	extend_p_table(n);
	return p_table[n];
}

std::vector<mpz_class> pentagonal_p_table(int n_max)
{
	if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
	std::lock_guard<std::mutex> lock(p_table_mutex);
	extend_p_table(n_max);
	return std::vector<mpz_class>(p_table.begin(),
				      p_table.begin() + n_max + 1);
}

std::vector<mpz_class> distinct_partition_counts(int n_max)
{
	if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
	std::vector<mpz_class> d(static_cast<std::size_t>(n_max) + 1);
	d[0] = 1;
	for (int part = 1; part <= n_max; ++part)
		for (int s = n_max; s >= part; --s)
			d[s] += d[s - part];
	return d;
}

std::vector<std::vector<mpz_class>> crank_mod_table(int b, int n_max,
						    bool patched,
						    const Guards& guards)
{
	if (b < 2) throw std::invalid_argument("modulus must be >= 2");
	if (n_max > guards.partitions)
		throw capacity_error("partition enumeration guard exceeded");

	std::vector<std::vector<mpz_class>> table(
		static_cast<std::size_t>(n_max) + 1,
		std::vector<mpz_class>(static_cast<std::size_t>(b)));

	for (int n = 0; n <= n_max; ++n) {
		for_each_partition(n, [&](const Parts& parts) {
			int m = crank_of(parts);
			int r = ((m % b) + b) % b;
			table[n][r] += 1;
		}, guards);
	}
	if (patched && n_max >= 1) {
		/* Product-side row at n = 1: t + t^{-1} - 1. */
		for (auto& v : table[1]) v = 0;
		table[1][1 % b] += 1;
		table[1][(b - 1) % b] += 1;
		table[1][0] -= 1;
	}
	return table;
}

mpz_class count_statistic(Family family, int a, int b, int n,
			  const Guards& guards)
{
	if (b < 2) throw std::invalid_argument("modulus must be >= 2");
	if (a < 0 || a >= b) throw std::invalid_argument("residue out of range");
	if (n < 0) throw std::invalid_argument("n must be >= 0");

	mpz_class count = 0;
	switch (family) {
	case Family::rank:
		for_each_partition(n, [&](const Parts& parts) {
			if (((rank_of(parts) % b) + b) % b == a) count += 1;
		}, guards);
		return count;

	case Family::crank:
		for_each_partition(n, [&](const Parts& parts) {
			if (((crank_of(parts) % b) + b) % b == a) count += 1;
		}, guards);
		return count;

	case Family::pp_trace:
		for_each_plane_partition(n, [&](const PlaneRows& rows) {
			if (((trace_of(rows) % b) + b) % b == a) count += 1;
		}, guards);
		return count;

	case Family::residual_crank: {
		if (n > guards.overpartitions)
			throw capacity_error("overpartition guard exceeded");
		/* Independent convolution path: overpartition = (distinct
		 * overlined parts) + (unrestricted non-overlined partition),
		 * residual crank = crank of the latter with the product-side
		 * patch at weight 1. */
		auto cranks = crank_mod_table(b, n, /*patched=*/true, guards);
		auto distinct = distinct_partition_counts(n);
		for (int k = 0; k <= n; ++k)
			count += distinct[n - k] * cranks[k][a];
		return count;
	}

	default:
		throw std::invalid_argument(
			"count_statistic supports rank, crank, pp-trace and residual-crank only");
	}
}

} // namespace oracles
} // namespace qdist
