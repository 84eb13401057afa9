#include "kdefect/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace kdefect {

GraphFixture fixture_greedy_trace() {
	GraphFixture f;
	f.name = "greedy_trace";
	f.note = "greedy completion trace instance";
	std::vector<std::pair<int, int>> edges = {
	    {0, 1}, {0, 3}, {0, 5}, {1, 4}, {1, 2}, {2, 5}, {2, 4}, {3, 5}, {2, 3}};
	f.graph = Graph::from_edges(6, edges);
	f.seed_set = {0};
	f.k = 1;
	f.expected_size = 4;
	f.expected_set = std::vector<int>{0, 2, 3, 5};
	return f;
}

GraphFixture fixture_flow_example() {
	GraphFixture f;
	f.name = "flow_example";
	f.note = "worked upper-bound example";
	std::vector<std::pair<int, int>> edges = {
	    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 3}};
	f.graph = Graph::from_edges(5, edges);
	f.seed_set = {0};
	f.k = 2;
	f.expected_size = 4;
	return f;
}

GeneratedBranch generate_missing_two_deg(std::uint64_t seed, int n, int k) {
	if (n < 1 || n > 24) throw std::invalid_argument("instance size outside [1, 24]");
	if (k < 0) throw std::invalid_argument("negative defectiveness budget");
	std::mt19937_64 rng(seed);
	auto pick = [&](int lo, int hi) {
		return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
	};

	int ns = pick(0, std::min(3, n - 1));
	int nc = n - ns;
	std::vector<int> s_ids(ns), c_ids(nc);
	std::iota(s_ids.begin(), s_ids.end(), 0);
	std::iota(c_ids.begin(), c_ids.end(), ns);
	std::shuffle(c_ids.begin(), c_ids.end(), rng);

	std::vector<std::pair<int, int>> edges;

	// S stays feasible: drop an S-S edge only while the budget allows.
	int s_missing = 0;
	for (int i = 0; i < ns; ++i)
		for (int j = i + 1; j < ns; ++j) {
			if (s_missing < k && rng() % 100 < 20) {
				++s_missing;
				continue;
			}
			edges.emplace_back(s_ids[i], s_ids[j]);
		}

	// S-C adjacency with a per-instance density.
	int pct = pick(20, 100);
	for (int s : s_ids)
		for (int c : c_ids)
			if (static_cast<int>(rng() % 100) < pct) edges.emplace_back(s, c);

	// The complement of G[C] is a disjoint union of paths, cycles, and
	// isolated vertices, so dbar_c never exceeds 2.
	std::vector<std::pair<int, int>> comp;
	int at = 0;
	while (at < nc) {
		int rem = nc - at;
		int kind = pick(0, 2);
		if (kind == 0 || rem < 2) {
			at += 1;  // isolated
		} else if (kind == 1 || rem < 3) {
			int len = pick(2, std::min(rem, 5));  // path
			for (int i = 1; i < len; ++i) comp.emplace_back(at + i - 1, at + i);
			at += len;
		} else {
			int len = pick(3, std::min(rem, 6));  // cycle
			for (int i = 1; i < len; ++i) comp.emplace_back(at + i - 1, at + i);
			comp.emplace_back(at + len - 1, at);
			at += len;
		}
	}
	std::vector<std::vector<bool>> missing(nc, std::vector<bool>(nc, false));
	for (auto& [a, b] : comp) missing[a][b] = missing[b][a] = true;
	for (int i = 0; i < nc; ++i)
		for (int j = i + 1; j < nc; ++j)
			if (!missing[i][j]) edges.emplace_back(c_ids[i], c_ids[j]);

	GeneratedBranch out;
	out.sub = std::make_unique<Subgraph>(whole_graph(Graph::from_edges(n, edges)));
	out.branch = make_root(out.sub->graph, s_ids, k);
	return out;
}

}  // namespace kdefect
