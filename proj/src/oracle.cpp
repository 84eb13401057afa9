#include "kdefect/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace kdefect {

namespace {

struct KdcSearch {
	int n, k;
	std::uint32_t free_mask;             // vertices open to the enumeration
	std::vector<std::uint32_t> adj;      // adjacency as bit rows
	std::uint32_t best = 0;
	int best_count = -1;

	// Include-first depth-first enumeration over free vertices in id order
	// visits candidate sets in lexicographic order, so the first strictly
	// improving maximum is the lexicographically smallest one.
	void dfs(int v, std::uint32_t cur, int count, int nonedges) {
		if (count > best_count) {
			best_count = count;
			best = cur;
		}
		while (v < n && !((free_mask >> v) & 1)) ++v;
		if (v >= n) return;
		if (count + std::popcount(free_mask >> v) <= best_count) return;
		int added = std::popcount(cur & ~adj[v]);
		if (nonedges + added <= k)
			dfs(v + 1, cur | (std::uint32_t(1) << v), count + 1, nonedges + added);
		dfs(v + 1, cur, count, nonedges);
	}
};

}  // namespace

std::vector<int> brute_force_max_kdc(const Graph& g, int k, std::span<const int> required) {
	if (g.n > 24)
		throw OracleSizeError("brute-force enumeration capped at 24 vertices");
	KdcSearch s;
	s.n = g.n;
	s.k = k;
	s.adj.assign(g.n, 0);
	for (int v = 0; v < g.n; ++v)
		for (int u : g.adj[v]) s.adj[v] |= std::uint32_t(1) << u;

	std::uint32_t req = 0;
	for (int v : required) {
		if (v < 0 || v >= g.n) throw std::invalid_argument("required vertex out of range");
		req |= std::uint32_t(1) << v;
	}
	int req_nonedges = 0;
	for (int v = 0; v < g.n; ++v)
		if ((req >> v) & 1)
			for (int u = v + 1; u < g.n; ++u)
				if ((req >> u) & 1 && !((s.adj[v] >> u) & 1)) ++req_nonedges;
	if (req_nonedges > k)
		throw std::invalid_argument("required set exceeds the defectiveness budget");

	s.free_mask = ~req & ((std::uint32_t(1) << g.n) - 1);
	s.dfs(0, req, std::popcount(req), req_nonedges);

	std::vector<int> out;
	for (int v = 0; v < g.n; ++v)
		if ((s.best >> v) & 1) out.push_back(v);
	return out;
}

int brute_force_flow_oracle(const Branch& b, const ColorAssignment& ca, int budget) {
	const int c = b.c_size();
	if (c > 18)
		throw OracleSizeError("flow oracle enumeration capped at 18 candidates");
	if (c == 0) return 0;

	// Collision masks over candidate positions: bit j of mask1[i] marks a
	// shared first color between the i-th and j-th candidates.
	std::vector<std::uint32_t> mask1(c, 0), mask2(c, 0);
	for (int i = 0; i < c; ++i)
		for (int j = 0; j < c; ++j) {
			if (i == j) continue;
			if (ca.col1[b.c_list[i]] == ca.col1[b.c_list[j]])
				mask1[i] |= std::uint32_t(1) << j;
			if (ca.col2[b.c_list[i]] == ca.col2[b.c_list[j]])
				mask2[i] |= std::uint32_t(1) << j;
		}

	// cost[m] = collision pairs within m plus the dbar_s total; built by
	// peeling the lowest set bit.
	std::vector<int> cost(std::size_t(1) << c, 0);
	int best = 0;
	for (std::uint32_t m = 1; m < (std::uint32_t(1) << c); ++m) {
		int i = std::countr_zero(m);
		std::uint32_t rest = m & (m - 1);
		cost[m] = cost[rest] + b.dbar_s[b.c_list[i]] +
		          std::popcount(rest & mask1[i]) + std::popcount(rest & mask2[i]);
		if (cost[m] <= budget) best = std::max(best, std::popcount(m));
	}
	return best;
}

namespace {

// Strictly decreasing for x > 1; the unique root in (1, 2) is the largest
// real root of the original degree-(k+shift+1) polynomial. Evaluated in
// extended precision because near k = 64 the root sits ~2^-k below 2.
Real128 recurrence_f(Real128 x, int k, int shift) {
	Real128 inv = Real128(1) / x;
	Real128 term = 1;
	Real128 sum = 0;
	for (int i = 1; i <= k; ++i) {
		term *= inv;
		sum += term;
	}
	for (int i = 0; i < shift; ++i) term *= inv;
	return sum + term - Real128(1);
}

Real128 bisect_root(int k, int shift, double* residual) {
	Real128 lo = 1, hi = 2;  // f(1) = k > 0, f(2) < 0
	for (int it = 0; it < 220 && hi - lo > Real128(1e-30); ++it) {
		Real128 mid = (lo + hi) / 2;
		(recurrence_f(mid, k, shift) > 0 ? lo : hi) = mid;
	}
	Real128 root = (lo + hi) / 2;
	*residual = static_cast<double>(recurrence_f(root, k, shift));
	return root;
}

}  // namespace

RootResult characteristic_roots(int k) {
	if (k < 1 || k > 64) throw std::invalid_argument("k outside [1, 64]");
	RootResult r;
	r.k = k;
	r.lambda_k = bisect_root(k, 3, &r.lambda_residual);
	r.gamma_k = bisect_root(k, 2, &r.gamma_residual);
	return r;
}

}  // namespace kdefect
