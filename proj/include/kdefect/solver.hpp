#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "kdefect/bounds.hpp"
#include "kdefect/branch.hpp"
#include "kdefect/graph.hpp"

namespace kdefect {

enum class BoundKind { double_coloring, single_coloring };
enum class BranchingRule { bs_three, baseline };

struct SolverConfig {
	int k = 0;
	BoundKind bound = BoundKind::double_coloring;
	BranchingRule branching = BranchingRule::bs_three;
	bool early_termination = true;
	SecondOrder second_order = SecondOrder::memory;
	std::chrono::milliseconds time_limit{0};  // 0 means unlimited
	std::uint64_t seed = 0;
	bool use_heuristic_seed = false;  // warm-start incumbent, off by default
	bool verify_stage2 = false;       // debug: run the whole-graph stage even
	                                  // when the first stage already suffices

	// Throws std::invalid_argument on k < 0 or on pairing the three-way
	// branching rule with early termination disabled (the rule leaves
	// branches only an ir_solve call can finish).
	void validate() const;
};

enum class StageOutcome { stage1_sufficient, stage2_needed };

struct SolveReport {
	Incumbent best;
	long long branches_explored = 0;
	long long ir_calls = 0;
	long long bound_prunes = 0;
	long long reductions_applied = 0;  // candidates removed by reduce
	StageOutcome stage = StageOutcome::stage1_sufficient;
	std::chrono::milliseconds wall_time{0};
	bool timed_out = false;
};

// Branch vertex with at least three candidate non-neighbors, preferring
// one that also misses part of S; empty when every candidate has at most
// two candidate non-neighbors. Smallest id within each preference tier.
std::optional<int> select_pivot_bs_three(const Branch& b);

// Branch vertex missing part of S if any, else the smallest candidate;
// empty only when C is empty.
std::optional<int> select_pivot_baseline(const Branch& b);

// One recursive exploration of a branch rooted at `b`, which must point
// into sub.graph; incumbent vertices are parent-graph ids. Exposed for
// white-box tests; solve() drives it over both stages.
void bbres_rec(const Branch& b, const Subgraph& sub, const SolverConfig& cfg,
               Incumbent& inc, SolveReport& report);

// Greedy warm start: sweep vertices by descending degeneracy rank, keeping
// each vertex that leaves the set within budget. Always feasible.
Incumbent heuristic_seed(const Graph& g, const DegeneracyOrder& ord, int k);

// Two-stage exact search for a maximum k-defective clique. Stage one runs
// one rooted subproblem per vertex over its rank-suffix two-hop
// neighborhood; the whole-graph stage runs only when stage one cannot rule
// out a small optimum (incumbent below k+1).
SolveReport solve(const Graph& g, const SolverConfig& cfg);

}  // namespace kdefect
