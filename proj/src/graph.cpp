#include "kdefect/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace kdefect {

namespace {

constexpr long long kMaxLabel = 2'000'000'000LL;

void finalize(Graph& g, std::vector<std::pair<int, int>> edges) {
	g.adj.assign(g.n, {});
	g.adj_bits.assign(g.n, Bitset(g.n));
	for (auto& [u, v] : edges) {
		if (u == v) {
			++g.self_loops_dropped;
			continue;
		}
		if (g.adj_bits[u].test(v)) {
			++g.duplicates_dropped;
			continue;
		}
		g.adj_bits[u].set(v);
		g.adj_bits[v].set(u);
		g.adj[u].push_back(v);
		g.adj[v].push_back(u);
		++g.m;
	}
	for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
}

bool data_line(const std::string& line) {
	for (char c : line) {
		if (c == ' ' || c == '\t' || c == '\r') continue;
		return c != '#' && c != '%';
	}
	return false;  // blank
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
	Graph g;
	g.n = n;
	g.labels.resize(n);
	for (int v = 0; v < n; ++v) g.labels[v] = v;
	for (auto& [u, v] : edges)
		if (u < 0 || u >= n || v < 0 || v >= n)
			throw std::invalid_argument("edge endpoint out of range");
	finalize(g, {edges.begin(), edges.end()});
	return g;
}

Graph parse_edge_list(std::istream& in) {
	std::vector<std::pair<long long, long long>> raw;
	std::string line;
	int line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		if (!data_line(line)) continue;
		std::istringstream ls(line);
		long long u, v;
		if (!(ls >> u >> v))
			throw ParseError("expected two vertex ids", line_no);
		std::string rest;
		if (ls >> rest)
			throw ParseError("trailing tokens after edge", line_no);
		if (u < 0 || v < 0)
			throw ParseError("negative vertex id", line_no);
		if (u > kMaxLabel || v > kMaxLabel)
			throw CapacityError("vertex id exceeds supported range");
		raw.emplace_back(u, v);
	}

	std::map<long long, int> dense;
	for (auto& [u, v] : raw) {
		dense.emplace(u, 0);
		dense.emplace(v, 0);
	}
	Graph g;
	g.n = static_cast<int>(dense.size());
	g.labels.reserve(g.n);
	for (auto& [label, id] : dense) {
		id = static_cast<int>(g.labels.size());
		g.labels.push_back(label);
	}
	std::vector<std::pair<int, int>> edges;
	edges.reserve(raw.size());
	for (auto& [u, v] : raw) edges.emplace_back(dense[u], dense[v]);
	finalize(g, std::move(edges));
	return g;
}

Graph parse_dimacs(std::istream& in) {
	std::string line;
	int line_no = 0;
	long long n = -1, m_declared = -1;
	std::vector<std::pair<int, int>> edges;
	while (std::getline(in, line)) {
		++line_no;
		if (line.empty() || line[0] == 'c' || line[0] == '\r') continue;
		std::istringstream ls(line);
		char tag;
		ls >> tag;
		if (tag == 'p') {
			std::string kind;
			if (!(ls >> kind >> n >> m_declared) || n < 0)
				throw ParseError("malformed problem line", line_no);
			if (n > kMaxLabel)
				throw CapacityError("vertex count exceeds supported range");
		} else if (tag == 'e') {
			long long u, v;
			if (!(ls >> u >> v))
				throw ParseError("expected two vertex ids", line_no);
			if (n < 0)
				throw ParseError("edge before problem line", line_no);
			if (u < 1 || u > n || v < 1 || v > n)
				throw ParseError("vertex id outside 1..n", line_no);
			edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
		} else {
			throw ParseError("unrecognized line tag", line_no);
		}
	}
	if (n < 0) throw ParseError("missing problem line", line_no);
	Graph g;
	g.n = static_cast<int>(n);
	g.labels.resize(g.n);
	for (int v = 0; v < g.n; ++v) g.labels[v] = v + 1;
	finalize(g, std::move(edges));
	return g;
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
	std::ifstream in(path);
	if (!in) throw std::runtime_error("cannot open " + path.string());
	return format == GraphFormat::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
	for (int u = 0; u < g.n; ++u)
		for (int v : g.adj[u])
			if (u < v) out << u << ' ' << v << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
	std::ofstream out(path);
	if (!out) throw std::runtime_error("cannot open " + path.string());
	write_edge_list(g, out);
}

DegeneracyOrder degeneracy_order(const Graph& g) {
	DegeneracyOrder out;
	out.order.reserve(g.n);
	out.rank.assign(g.n, -1);
	std::vector<int> deg(g.n);
	std::set<std::pair<int, int>> live;  // (current degree, id), begin() = next peel
	for (int v = 0; v < g.n; ++v) {
		deg[v] = g.degree(v);
		live.insert({deg[v], v});
	}
	while (!live.empty()) {
		auto [d, v] = *live.begin();
		live.erase(live.begin());
		out.degeneracy = std::max(out.degeneracy, d);
		out.rank[v] = static_cast<int>(out.order.size());
		out.order.push_back(v);
		for (int u : g.adj[v]) {
			if (out.rank[u] >= 0) continue;
			live.erase({deg[u], u});
			live.insert({--deg[u], u});
		}
	}
	return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
	Subgraph sub;
	sub.to_parent.assign(vertices.begin(), vertices.end());
	int k = static_cast<int>(vertices.size());
	std::vector<std::pair<int, int>> local(k);
	for (int i = 0; i < k; ++i) {
		int v = vertices[i];
		if (v < 0 || v >= g.n)
			throw std::invalid_argument("subgraph vertex out of range");
		local[i] = {v, i};
	}
	std::sort(local.begin(), local.end());
	for (int i = 1; i < k; ++i)
		if (local[i].first == local[i - 1].first)
			throw std::invalid_argument("subgraph vertices not distinct");

	std::vector<std::pair<int, int>> edges;
	for (int i = 0; i < k; ++i) {
		int v = vertices[i];
		for (int w : g.adj[v]) {
			auto it = std::lower_bound(local.begin(), local.end(), std::make_pair(w, -1));
			if (it != local.end() && it->first == w && v < w)
				edges.emplace_back(i, it->second);
		}
	}
	sub.graph = Graph::from_edges(k, edges);
	for (int i = 0; i < k; ++i) sub.graph.labels[i] = g.labels[vertices[i]];
	return sub;
}

Subgraph whole_graph(const Graph& g) {
	Subgraph sub;
	sub.graph = g;
	sub.to_parent.resize(g.n);
	for (int v = 0; v < g.n; ++v) sub.to_parent[v] = v;
	return sub;
}

std::vector<int> two_hop_suffix_vertices(const Graph& g, const DegeneracyOrder& ord, int v) {
	if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
	// dist <= 2 is measured in g itself; the rank filter is applied after.
	thread_local std::vector<std::uint8_t> seen;
	if (static_cast<int>(seen.size()) < g.n) seen.assign(g.n, 0);
	std::vector<int> touched;
	touched.push_back(v);
	seen[v] = 1;
	for (int u : g.adj[v]) {
		if (!seen[u]) {
			seen[u] = 1;
			touched.push_back(u);
		}
		for (int w : g.adj[u]) {
			if (!seen[w]) {
				seen[w] = 1;
				touched.push_back(w);
			}
		}
	}
	std::vector<int> out;
	int rv = ord.rank[v];
	for (int u : touched) {
		if (ord.rank[u] >= rv) out.push_back(u);
		seen[u] = 0;
	}
	std::sort(out.begin(), out.end());
	return out;
}

Subgraph two_hop_suffix_subgraph(const Graph& g, const DegeneracyOrder& ord, int v) {
	return induced_subgraph(g, two_hop_suffix_vertices(g, ord, v));
}

}  // namespace kdefect
