#include "kdefect/branch.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdefect {

long long Branch::total_nonedges() const {
	long long twice_c = 0, s_side = 0;
	for (int v : c_list) {
		s_side += dbar_s[v];
		twice_c += dbar_c[v];
	}
	return nonedges_s + s_side + twice_c / 2;
}

Branch make_root(const Graph& g, std::span<const int> s0, int k) {
	if (k < 0) throw std::invalid_argument("negative defectiveness budget");
	Branch b;
	b.g = &g;
	b.k = k;
	b.member.assign(g.n, Membership::in_c);
	b.dbar_s.assign(g.n, 0);
	b.dbar_c.assign(g.n, 0);

	Bitset s_mask(g.n);
	for (int v : s0) {
		if (v < 0 || v >= g.n) throw std::invalid_argument("seed vertex out of range");
		if (s_mask.test(v)) throw std::invalid_argument("seed vertices not distinct");
		s_mask.set(v);
		b.member[v] = Membership::in_s;
		b.s_list.push_back(v);
	}
	int ns = static_cast<int>(b.s_list.size());
	int s_edges = 0;
	for (int v : b.s_list) s_edges += g.adj_bits[v].count_and(s_mask);
	b.nonedges_s = ns * (ns - 1) / 2 - s_edges / 2;
	if (b.nonedges_s > k)
		throw std::invalid_argument("seed set exceeds the defectiveness budget");

	Bitset c_mask(g.n);
	for (int v = 0; v < g.n; ++v)
		if (b.member[v] == Membership::in_c) {
			b.c_list.push_back(v);
			c_mask.set(v);
		}
	int nc = static_cast<int>(b.c_list.size());
	for (int v : b.c_list) {
		b.dbar_s[v] = ns - g.adj_bits[v].count_and(s_mask);
		b.dbar_c[v] = (nc - 1) - g.adj_bits[v].count_and(c_mask);
	}
	return b;
}

namespace {

void drop_from_c(Branch& b, int v) {
	b.member[v] = Membership::out;
	b.c_list.erase(std::find(b.c_list.begin(), b.c_list.end(), v));
}

}  // namespace

Branch include_pivot(const Branch& b, int v) {
	if (!b.in_c(v)) throw std::invalid_argument("pivot not in candidate set");
	if (b.nonedges_s + b.dbar_s[v] > b.k)
		throw std::invalid_argument("pivot would exceed the defectiveness budget");
	Branch child = b;
	drop_from_c(child, v);
	child.member[v] = Membership::in_s;
	child.s_list.push_back(v);
	child.nonedges_s += child.dbar_s[v];
	for (int u : child.c_list)
		if (!b.g->has_edge(u, v)) {
			++child.dbar_s[u];
			--child.dbar_c[u];
		}
	return child;
}

Branch exclude_pivot(const Branch& b, int v) {
	if (!b.in_c(v)) throw std::invalid_argument("pivot not in candidate set");
	Branch child = b;
	drop_from_c(child, v);
	for (int u : child.c_list)
		if (!b.g->has_edge(u, v)) --child.dbar_c[u];
	return child;
}

Branch reduce(Branch b, int /*incumbent_size*/) {
	std::vector<int> removed;
	std::vector<int> kept;
	kept.reserve(b.c_list.size());
	for (int v : b.c_list) {
		if (b.nonedges_s + b.dbar_s[v] > b.k) {
			removed.push_back(v);
			b.member[v] = Membership::out;
		} else {
			kept.push_back(v);
		}
	}
	if (removed.empty()) return b;
	b.c_list = std::move(kept);
	for (int v : b.c_list)
		for (int r : removed)
			if (!b.g->has_edge(v, r)) --b.dbar_c[v];
	return b;
}

bool is_trivially_solved(const Branch& b) {
	return b.total_nonedges() <= b.k;
}

}  // namespace kdefect
