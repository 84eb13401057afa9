#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kdefect/branch.hpp"
#include "kdefect/graph.hpp"

namespace kdefect {

// Small instances with known optima, embedded so tests need no data files.
struct GraphFixture {
	std::string name;
	std::string note;  // what the instance exercises
	Graph graph;
	std::vector<int> seed_set;  // S for branch-level checks; empty if unused
	int k = 0;
	int expected_size = 0;
	std::optional<std::vector<int>> expected_set;
};

// Six vertices, nine edges; from {v0} with k=1 the greedy completion reaches
// {v0, v2, v3, v5} and the global optimum is 4.
GraphFixture fixture_greedy_trace();

// A seed vertex adjacent to four candidates with edges c1-c4 and c2-c3; the
// worked example for both upper bounds at k=2 (double 4, single 5).
GraphFixture fixture_flow_example();

// A branch plus the subgraph it points into; keeps the graph alive and at a
// stable address while the branch moves around.
struct GeneratedBranch {
	std::unique_ptr<Subgraph> sub;
	Branch branch;
};

// Random branch whose candidate complement is a disjoint union of paths,
// cycles, and isolated vertices, so every candidate has at most two
// non-neighbors among candidates. S is a random feasible seed set.
// n counts all vertices (|S| + |C|) and is capped at 24 for oracle use.
GeneratedBranch generate_missing_two_deg(std::uint64_t seed, int n, int k);

}  // namespace kdefect
