#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kdefect/bitset.hpp"

namespace kdefect {

// Input file could not be parsed; line is 1-based.
struct ParseError : std::runtime_error {
	int line;
	ParseError(const std::string& msg, int line_no)
	    : std::runtime_error(msg), line(line_no) {}
};

// Vertex label outside the supported id range.
struct CapacityError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Undirected simple graph over dense 0-based ids. Neighbor lists are sorted
// ascending; adj_bits mirrors adj exactly. labels maps dense ids back to the
// labels the input used.
struct Graph {
	int n = 0;
	long long m = 0;
	std::vector<std::vector<int>> adj;
	std::vector<Bitset> adj_bits;
	std::vector<long long> labels;
	long long self_loops_dropped = 0;
	long long duplicates_dropped = 0;

	bool has_edge(int u, int v) const { return adj_bits[u].test(v); }
	int degree(int v) const { return static_cast<int>(adj[v].size()); }
	std::span<const int> neighbors(int v) const { return adj[v]; }

	// Normalizes the edge list: self loops and duplicates are dropped and
	// counted, endpoints must be in [0, n).
	static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
};

enum class GraphFormat { edge_list, dimacs };

// edge_list: one "u v" pair per line, '#' or '%' comment lines, arbitrary
// non-negative labels (remapped to dense ids in increasing label order).
// dimacs: "p edge n m" header then 1-based "e u v" lines.
Graph parse_edge_list(std::istream& in);
Graph parse_dimacs(std::istream& in);
Graph load_graph(const std::filesystem::path& path, GraphFormat format);

// Writes dense-id "u v" lines; reloading yields the identical graph.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

// Peeling order: repeatedly delete a minimum-degree vertex, smallest id on
// ties. order[i] is the i-th deleted vertex, rank is its inverse permutation,
// degeneracy the largest minimum degree ever seen.
struct DegeneracyOrder {
	std::vector<int> order;
	std::vector<int> rank;
	int degeneracy = 0;
};

DegeneracyOrder degeneracy_order(const Graph& g);

// A vertex-induced subgraph relabeled to local ids 0..k-1 plus the map back
// to the ids of the graph it was cut from.
struct Subgraph {
	Graph graph;
	std::vector<int> to_parent;
};

// Local ids follow the order of `vertices`, which must be distinct.
Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Identity wrapper so whole-graph searches use the same interfaces.
Subgraph whole_graph(const Graph& g);

// Vertices within distance two of v whose rank is >= rank(v), v included,
// sorted ascending. Any solution through v that is large enough to have
// diameter two lives inside this set, which is what makes the per-vertex
// subproblems exhaustive.
std::vector<int> two_hop_suffix_vertices(const Graph& g, const DegeneracyOrder& ord, int v);
Subgraph two_hop_suffix_subgraph(const Graph& g, const DegeneracyOrder& ord, int v);

}  // namespace kdefect
