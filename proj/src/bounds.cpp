#include "kdefect/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>

namespace kdefect {

namespace {

// Smallest color not stamped this round; stamp[] is sized one past the
// worst case so the scan always terminates.
int first_free_color(const std::vector<int>& stamp, int round) {
	int c = 0;
	while (stamp[c] == round) ++c;
	return c;
}

}  // namespace

ColorAssignment color_first(const Branch& b, const DegeneracyOrder& ord) {
	const Graph& g = *b.g;
	ColorAssignment ca;
	ca.col1.assign(g.n, -1);
	ca.col2.assign(g.n, -1);
	std::vector<int> visit = b.c_list;
	std::sort(visit.begin(), visit.end(),
	          [&](int a, int c) { return ord.rank[a] < ord.rank[c]; });
	std::vector<int> stamp(b.c_size() + 1, -1);
	int round = 0;
	for (int v : visit) {
		for (int u : g.adj[v])
			if (ca.col1[u] >= 0) stamp[ca.col1[u]] = round;
		int c = first_free_color(stamp, round);
		ca.col1[v] = c;
		if (c == static_cast<int>(ca.classes1.size())) ca.classes1.emplace_back();
		ca.classes1[c].push_back(v);
		++round;
	}
	return ca;
}

void color_second(const Branch& b, ColorAssignment& ca, SecondOrder order,
                  std::uint64_t seed, const DegeneracyOrder& ord) {
	const Graph& g = *b.g;
	std::vector<int> visit = b.c_list;
	switch (order) {
	case SecondOrder::memory:
		break;
	case SecondOrder::random: {
		std::mt19937_64 rng(seed);
		std::shuffle(visit.begin(), visit.end(), rng);
		break;
	}
	case SecondOrder::s_ord:
		std::stable_sort(visit.begin(), visit.end(),
		                 [&](int a, int c) { return b.dbar_s[a] < b.dbar_s[c]; });
		break;
	case SecondOrder::s_rev:
		std::stable_sort(visit.begin(), visit.end(),
		                 [&](int a, int c) { return b.dbar_s[a] > b.dbar_s[c]; });
		break;
	case SecondOrder::peel_ord:
		std::sort(visit.begin(), visit.end(),
		          [&](int a, int c) { return ord.rank[a] < ord.rank[c]; });
		break;
	case SecondOrder::peel_rev:
		std::sort(visit.begin(), visit.end(),
		          [&](int a, int c) { return ord.rank[a] > ord.rank[c]; });
		break;
	}
	ca.classes2.clear();
	for (int v : b.c_list) ca.col2[v] = -1;
	std::vector<int> stamp(b.c_size() + 1, -1);
	int round = 0;
	for (int v : visit) {
		for (int u : g.adj[v])
			if (ca.col2[u] >= 0) stamp[ca.col2[u]] = round;
		for (int u : ca.classes1[ca.col1[v]])
			if (ca.col2[u] >= 0) stamp[ca.col2[u]] = round;
		int c = first_free_color(stamp, round);
		ca.col2[v] = c;
		if (c == static_cast<int>(ca.classes2.size())) ca.classes2.emplace_back();
		ca.classes2[c].push_back(v);
		++round;
	}
}

int color_indicator(const ColorAssignment& ca, int u, int v) {
	// Pair uniqueness keeps this in {0, 1} for distinct candidates.
	return static_cast<int>(ca.col1[u] == ca.col1[v]) +
	       static_cast<int>(ca.col2[u] == ca.col2[v]);
}

int ub_single(const Branch& b, const ColorAssignment& ca) {
	const int budget = b.k - b.nonedges_s;
	std::vector<int> marginals;
	marginals.reserve(b.c_size());
	std::vector<int> ds;
	for (const auto& cls : ca.classes1) {
		ds.clear();
		for (int v : cls) ds.push_back(b.dbar_s[v]);
		std::sort(ds.begin(), ds.end());
		for (std::size_t j = 0; j < ds.size(); ++j)
			marginals.push_back(ds[j] + static_cast<int>(j));
	}
	std::sort(marginals.begin(), marginals.end());
	int taken = 0;
	long long acc = 0;
	for (int mc : marginals) {
		if (acc + mc > budget) break;
		acc += mc;
		++taken;
	}
	return b.s_size() + taken;
}

void FlowNetwork::add_arc(int from, int to, int cap, int cost, int vertex) {
	int idx = static_cast<int>(arcs.size());
	arcs.push_back({from, to, cap, cost, idx + 1, vertex});
	arcs.push_back({to, from, 0, -cost, idx, -1});
	out[from].push_back(idx);
	out[to].push_back(idx + 1);
}

FlowNetwork build_flow_network(const Branch& b, const ColorAssignment& ca) {
	FlowNetwork net;
	const int n1 = static_cast<int>(ca.classes1.size());
	const int n2 = static_cast<int>(ca.classes2.size());
	net.class1_base = 2;
	net.class2_base = 2 + n1;
	net.node_count = 2 + n1 + n2;
	net.out.resize(net.node_count);
	for (int c = 0; c < n1; ++c)
		for (int j = 0; j <= b.k; ++j)
			net.add_arc(FlowNetwork::source, net.class1_base + c, 1, j);
	for (int c = 0; c < n2; ++c)
		for (int j = 0; j <= b.k; ++j)
			net.add_arc(net.class2_base + c, FlowNetwork::sink, 1, j);
	for (int v : b.c_list)
		net.add_arc(net.class1_base + ca.col1[v], net.class2_base + ca.col2[v], 1,
		            b.dbar_s[v], v);
	return net;
}

FlowResult constrained_max_flow(FlowNetwork& net, int budget) {
	if (budget < 0) throw std::invalid_argument("negative flow budget");
	for (std::size_t i = 0; i < net.arcs.size(); i += 2)
		if (net.arcs[i].cost < 0)
			throw std::invalid_argument("negative forward arc cost");

	FlowResult res;
	const int n = net.node_count;
	const long long inf = std::numeric_limits<long long>::max() / 4;
	std::vector<long long> pi(n, 0), dist(n);
	std::vector<int> pre(n);
	using Item = std::pair<long long, int>;
	for (;;) {
		std::fill(dist.begin(), dist.end(), inf);
		std::fill(pre.begin(), pre.end(), -1);
		dist[FlowNetwork::source] = 0;
		std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
		pq.emplace(0, FlowNetwork::source);
		while (!pq.empty()) {
			auto [d, v] = pq.top();
			pq.pop();
			if (d > dist[v]) continue;
			for (int ai : net.out[v]) {
				const FlowArc& a = net.arcs[ai];
				if (a.cap <= 0) continue;
				long long nd = d + a.cost + pi[v] - pi[a.to];
				if (nd < dist[a.to]) {
					dist[a.to] = nd;
					pre[a.to] = ai;
					pq.emplace(nd, a.to);
				}
			}
		}
		if (dist[FlowNetwork::sink] >= inf) break;
		long long path_cost = dist[FlowNetwork::sink] + pi[FlowNetwork::sink];
		if (res.cost + path_cost > budget) break;
		// Reached nodes absorb their distance; unreached nodes can never
		// rejoin the residual graph, so their stale potentials are inert.
		for (int v = 0; v < n; ++v)
			if (dist[v] < inf) pi[v] += dist[v];
		for (int v = FlowNetwork::sink; v != FlowNetwork::source;) {
			FlowArc& a = net.arcs[pre[v]];
			a.cap -= 1;
			net.arcs[a.rev].cap += 1;
			v = a.from;
		}
		++res.flow;
		res.cost += static_cast<int>(path_cost);
		assert(res.path_costs.empty() ||
		       res.path_costs.back() <= static_cast<int>(path_cost));
		res.path_costs.push_back(static_cast<int>(path_cost));
	}
	for (std::size_t i = 0; i < net.arcs.size(); i += 2) {
		const FlowArc& a = net.arcs[i];
		if (a.vertex >= 0 && a.cap == 0) res.selected.push_back(a.vertex);
	}
	std::sort(res.selected.begin(), res.selected.end());
	return res;
}

DoubleBound ub_double_full(const Branch& b, const DegeneracyOrder& ord,
                           SecondOrder order, std::uint64_t seed) {
	DoubleBound out;
	if (b.c_size() == 0) {
		out.ub = b.s_size();
		out.colors.col1.assign(b.g->n, -1);
		out.colors.col2.assign(b.g->n, -1);
		return out;
	}
	out.colors = color_first(b, ord);
	color_second(b, out.colors, order, seed, ord);
	FlowNetwork net = build_flow_network(b, out.colors);
	FlowResult f = constrained_max_flow(net, b.k - b.nonedges_s);
	out.ub = b.s_size() + f.flow;
	out.flow = f.flow;
	out.cost = f.cost;
	out.selected = std::move(f.selected);
	out.path_costs = std::move(f.path_costs);
	return out;
}

int ub_double(const Branch& b, const DegeneracyOrder& ord, SecondOrder order,
              std::uint64_t seed) {
	return ub_double_full(b, ord, order, seed).ub;
}

}  // namespace kdefect
