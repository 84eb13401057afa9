#pragma once

#include <cstdint>
#include <vector>

#include "kdefect/branch.hpp"
#include "kdefect/graph.hpp"

namespace kdefect {

// Visit order for the second coloring pass.
enum class SecondOrder {
	memory,    // candidate-list order (default)
	random,    // shuffled by the configured seed
	s_ord,     // ascending dbar_s, stable
	s_rev,     // descending dbar_s, stable
	peel_ord,  // ascending degeneracy rank
	peel_rev,  // descending degeneracy rank
};

// Two proper colorings of the candidate subgraph. The second is also
// pair-unique: no two candidates share both colors, so a pair can collide
// in at most one of the two colorings.
struct ColorAssignment {
	std::vector<int> col1, col2;                    // per vertex, -1 outside C
	std::vector<std::vector<int>> classes1, classes2;  // members per color
};

// Greedy proper coloring of the candidate subgraph, visiting candidates by
// ascending degeneracy rank of the branch's graph; fills col1/classes1.
ColorAssignment color_first(const Branch& b, const DegeneracyOrder& ord);

// Second greedy pass: each candidate takes the smallest color not used by
// an already-colored candidate neighbor nor by an already-colored member
// of its first color class. Fills col2/classes2.
void color_second(const Branch& b, ColorAssignment& ca, SecondOrder order,
                  std::uint64_t seed, const DegeneracyOrder& ord);

// 1 when u and v share a color in either coloring (never both, by pair
// uniqueness), else 0.
int color_indicator(const ColorAssignment& ca, int u, int v);

// Single-coloring bound: |S| plus the largest candidate count packable
// within budget k - |missing S pairs|, where taking the j-th member of a
// color class (sorted by dbar_s) costs dbar_s + (j-1). Per-class marginals
// increase, so a globally sorted prefix of marginals is exact.
int ub_single(const Branch& b, const ColorAssignment& ca);

struct FlowArc {
	int from = 0, to = 0;
	int cap = 0;       // residual capacity
	int cost = 0;
	int rev = 0;       // index of the paired arc
	int vertex = -1;   // candidate id on internal arcs
};

// Unit-capacity network: source 0, sink 1, one node per color class of
// each coloring. k+1 parallel source arcs per first-coloring class with
// costs 0..k (likewise sink arcs per second-coloring class), and one
// internal arc per candidate costing dbar_s. Arcs come in forward/reverse
// pairs; forward arcs sit at even indices.
struct FlowNetwork {
	static constexpr int source = 0;
	static constexpr int sink = 1;
	int node_count = 0;
	int class1_base = 0, class2_base = 0;
	std::vector<FlowArc> arcs;
	std::vector<std::vector<int>> out;  // arc indices per node

	void add_arc(int from, int to, int cap, int cost, int vertex = -1);
};

FlowNetwork build_flow_network(const Branch& b, const ColorAssignment& ca);

struct FlowResult {
	int flow = 0;
	int cost = 0;
	std::vector<int> selected;    // candidates whose internal arc is saturated
	std::vector<int> path_costs;  // augmenting-path costs, non-decreasing
};

// Successive shortest augmenting paths with node potentials; every path
// carries one unit. Augments while accumulated cost plus the next path
// cost stays within the budget, which maximizes the flow among flows of
// cost <= budget because path costs never decrease. Consumes the network's
// capacities. Throws std::invalid_argument on a negative budget or a
// negative forward-arc cost.
FlowResult constrained_max_flow(FlowNetwork& net, int budget);

// Double-coloring bound: color twice, build the network, run the
// constrained flow with budget k - |missing S pairs|; ub = |S| + flow.
struct DoubleBound {
	int ub = 0;
	int flow = 0;
	int cost = 0;
	std::vector<int> selected;    // sorted candidate ids
	std::vector<int> path_costs;
	ColorAssignment colors;
};

DoubleBound ub_double_full(const Branch& b, const DegeneracyOrder& ord,
                           SecondOrder order, std::uint64_t seed);
int ub_double(const Branch& b, const DegeneracyOrder& ord, SecondOrder order,
              std::uint64_t seed);

}  // namespace kdefect
