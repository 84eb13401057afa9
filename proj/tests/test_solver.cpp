#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>
#include "kdefect/fixtures.hpp"
#include "kdefect/irsolver.hpp"
#include "kdefect/oracle.hpp"
#include "kdefect/solver.hpp"
#include "test_util.hpp"

using namespace kdefect;
using namespace kdefect::testing;

namespace {

SolverConfig make_cfg(int k, BoundKind bound, BranchingRule branching, bool et) {
	SolverConfig cfg;
	cfg.k = k;
	cfg.bound = bound;
	cfg.branching = branching;
	cfg.early_termination = et;
	return cfg;
}

// The four ablation configurations: both bounds crossed with the new
// branching-plus-greedy pipeline and with the plain framework.
std::vector<SolverConfig> all_variants(int k) {
	return {
	    make_cfg(k, BoundKind::double_coloring, BranchingRule::bs_three, true),
	    make_cfg(k, BoundKind::single_coloring, BranchingRule::bs_three, true),
	    make_cfg(k, BoundKind::double_coloring, BranchingRule::baseline, false),
	    make_cfg(k, BoundKind::single_coloring, BranchingRule::baseline, false),
	};
}

}  // namespace

TEST_CASE("configuration validation rejects inconsistent settings") {
	SolverConfig ok = make_cfg(2, BoundKind::double_coloring, BranchingRule::baseline, false);
	CHECK_NOTHROW(ok.validate());

	SolverConfig bad_pair = make_cfg(2, BoundKind::double_coloring, BranchingRule::bs_three, false);
	CHECK_THROWS_AS(bad_pair.validate(), std::invalid_argument);

	SolverConfig bad_k = make_cfg(-1, BoundKind::double_coloring, BranchingRule::bs_three, true);
	CHECK_THROWS_AS(bad_k.validate(), std::invalid_argument);

	SolverConfig bad_limit = make_cfg(0, BoundKind::double_coloring, BranchingRule::bs_three, true);
	bad_limit.time_limit = std::chrono::milliseconds(-5);
	CHECK_THROWS_AS(bad_limit.validate(), std::invalid_argument);
}

TEST_CASE("pivot selection follows the tier rules") {
	GraphFixture fx = fixture_greedy_trace();
	Branch trace_root = make_root(fx.graph, fx.seed_set, fx.k);
	// Every candidate has at most two candidate non-neighbors here, so the
	// three-non-neighbor rule finds nothing and the plain rule takes the
	// smallest vertex missing part of S.
	CHECK_FALSE(select_pivot_bs_three(trace_root).has_value());
	REQUIRE(select_pivot_baseline(trace_root).has_value());
	CHECK(*select_pivot_baseline(trace_root) == 2);

	// Four mutually non-adjacent candidates; vertex 1 also misses the seed.
	Graph almost_star = Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {0, 4}});
	std::vector<int> seed0 = {0};
	Branch tier1 = make_root(almost_star, seed0, 4);
	REQUIRE(select_pivot_bs_three(tier1).has_value());
	CHECK(*select_pivot_bs_three(tier1) == 1);

	// Same shape but every candidate sees the whole seed: second tier picks
	// the smallest id, and so does the plain rule's fallback.
	Graph star = Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
	Branch tier2 = make_root(star, seed0, 4);
	REQUIRE(select_pivot_bs_three(tier2).has_value());
	CHECK(*select_pivot_bs_three(tier2) == 1);
	REQUIRE(select_pivot_baseline(tier2).has_value());
	CHECK(*select_pivot_baseline(tier2) == 1);

	// Empty candidate pool.
	Graph k2 = complete_graph(2);
	std::vector<int> both = {0, 1};
	Branch no_c = make_root(k2, both, 0);
	CHECK_FALSE(select_pivot_bs_three(no_c).has_value());
	CHECK_FALSE(select_pivot_baseline(no_c).has_value());
}

TEST_CASE("one exploration of the traced instance ends in a single greedy call") {
	GraphFixture fx = fixture_greedy_trace();
	Subgraph whole = whole_graph(fx.graph);
	Branch root = make_root(whole.graph, fx.seed_set, fx.k);
	SolverConfig cfg = make_cfg(fx.k, BoundKind::double_coloring, BranchingRule::bs_three, true);
	Incumbent inc;
	SolveReport rep;
	bbres_rec(root, whole, cfg, inc, rep);
	CHECK(inc.vertices == std::vector<int>{0, 2, 3, 5});
	CHECK(rep.branches_explored == 1);
	CHECK(rep.ir_calls == 1);
	CHECK(rep.bound_prunes == 0);
	CHECK_FALSE(rep.timed_out);
}

TEST_CASE("a dominated branch is pruned before any child is created") {
	Graph k5 = complete_graph(5);
	Subgraph whole = whole_graph(k5);
	Branch root = make_root(whole.graph, {}, 2);
	SolverConfig cfg = make_cfg(2, BoundKind::double_coloring, BranchingRule::bs_three, true);
	Incumbent inc;
	inc.vertices = {0, 1, 2, 3, 4};
	SolveReport rep;
	bbres_rec(root, whole, cfg, inc, rep);
	CHECK(rep.branches_explored == 1);
	CHECK(rep.bound_prunes == 1);
	CHECK(rep.ir_calls == 0);
	CHECK(inc.vertices == std::vector<int>{0, 1, 2, 3, 4});

	// A branch that points into a different graph is rejected outright.
	Graph other = complete_graph(5);
	Branch stray = make_root(other, {}, 2);
	Incumbent inc2;
	SolveReport rep2;
	CHECK_THROWS_AS(bbres_rec(stray, whole, cfg, inc2, rep2), std::invalid_argument);
}

TEST_CASE("solve handles the worked examples") {
	GraphFixture fx = fixture_greedy_trace();

	SolveReport rep1 = solve(fx.graph, make_cfg(1, BoundKind::double_coloring, BranchingRule::bs_three, true));
	CHECK(rep1.best.size() == 4);
	CHECK(rep1.stage == StageOutcome::stage1_sufficient);
	CHECK_FALSE(rep1.timed_out);
	CHECK(count_nonedges(fx.graph, rep1.best.vertices) <= 1);

	SolveReport rep0 = solve(fx.graph, make_cfg(0, BoundKind::double_coloring, BranchingRule::bs_three, true));
	CHECK(rep0.best.size() == 3);
	CHECK(count_nonedges(fx.graph, rep0.best.vertices) == 0);
	CHECK(static_cast<int>(brute_force_max_kdc(fx.graph, 0).size()) == 3);

	Graph k5 = complete_graph(5);
	SolveReport rep5 = solve(k5, make_cfg(2, BoundKind::double_coloring, BranchingRule::bs_three, true));
	CHECK(rep5.best.size() == 5);
	CHECK(rep5.stage == StageOutcome::stage1_sufficient);
}

TEST_CASE("an empty graph forces the whole-graph stage") {
	// Stage one roots see singleton neighborhoods only, so the incumbent
	// stays below k+1 and the whole-graph stage must close the gap.
	Graph e4 = empty_graph(4);
	SolveReport rep = solve(e4, make_cfg(1, BoundKind::double_coloring, BranchingRule::bs_three, true));
	CHECK(rep.best.size() == 2);
	CHECK(rep.stage == StageOutcome::stage2_needed);
	CHECK_FALSE(rep.timed_out);
	CHECK(rep.best.vertices == std::vector<int>{0, 1});
	CHECK(rep.branches_explored == 4);
	CHECK(rep.ir_calls == 2);
	CHECK(rep.bound_prunes == 1);
}

TEST_CASE("heuristic seed is feasible and never beats the optimum") {
	Graph k5 = complete_graph(5);
	DegeneracyOrder ord5 = degeneracy_order(k5);
	CHECK(heuristic_seed(k5, ord5, 0).size() == 5);

	Graph e4 = empty_graph(4);
	DegeneracyOrder ord4 = degeneracy_order(e4);
	CHECK(heuristic_seed(e4, ord4, 1).size() == 2);

	for (int trial = 0; trial < 40; ++trial) {
		int n = 6 + trial % 11;
		double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
		int k = trial % 5;
		Graph g = er_graph(n, p, 5100 + trial);
		DegeneracyOrder ord = degeneracy_order(g);
		Incumbent seed = heuristic_seed(g, ord, k);
		CHECK(count_nonedges(g, seed.vertices) <= k);
		int opt = static_cast<int>(brute_force_max_kdc(g, k).size());
		CHECK(seed.size() <= opt);

		// Warm starting must not change the answer.
		SolverConfig warm = make_cfg(k, BoundKind::double_coloring, BranchingRule::bs_three, true);
		warm.use_heuristic_seed = true;
		CHECK(solve(g, warm).best.size() == opt);
	}
}

TEST_CASE("exact on random graphs across all variant configurations") {
	for (int trial = 0; trial < 90; ++trial) {
		int n = 6 + trial % 13;
		double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
		int k = trial % 5;
		Graph g = er_graph(n, p, 4200 + trial);
		int opt = static_cast<int>(brute_force_max_kdc(g, k).size());

		for (const SolverConfig& cfg : all_variants(k)) {
			SolveReport rep = solve(g, cfg);
			CHECK(rep.best.size() == opt);
			CHECK_FALSE(rep.timed_out);
			CHECK(count_nonedges(g, rep.best.vertices) <= k);
		}

		// Any subset of a feasible set stays feasible; spot-check the
		// returned optimum against that.
		SolveReport full = solve(g, all_variants(k)[0]);
		std::mt19937_64 rng(9000 + trial);
		for (int rep_i = 0; rep_i < 5; ++rep_i) {
			std::vector<int> sub;
			for (int v : full.best.vertices)
				if (rng() & 1) sub.push_back(v);
			CHECK(count_nonedges(g, sub) <= k);
		}
	}
}

TEST_CASE("budget zero reduces to maximum clique") {
	for (int trial = 0; trial < 12; ++trial) {
		Graph g = er_graph(8 + trial, 0.5, 6400 + trial);
		int clique = static_cast<int>(brute_force_max_kdc(g, 0).size());
		for (const SolverConfig& cfg : all_variants(0)) {
			SolveReport rep = solve(g, cfg);
			CHECK(rep.best.size() == clique);
			CHECK(count_nonedges(g, rep.best.vertices) == 0);
		}
	}
}

TEST_CASE("a greedy leaf spawns no children") {
	for (int trial = 0; trial < 40; ++trial) {
		int n = 6 + trial % 14;
		int k = trial % 5;
		GeneratedBranch gb = generate_missing_two_deg(7700 + trial * 13, n, k);
		if (gb.branch.s_size() == 0) continue;
		SolverConfig cfg = make_cfg(k, BoundKind::double_coloring, BranchingRule::bs_three, true);
		Incumbent inc;
		SolveReport rep;
		bbres_rec(gb.branch, *gb.sub, cfg, inc, rep);
		// The empty incumbent cannot dominate a branch whose seed set is
		// nonempty, so the only exit is the greedy call, with no children.
		CHECK(rep.branches_explored == 1);
		CHECK(rep.ir_calls == 1);
		CHECK(rep.bound_prunes == 0);
		CHECK(inc.size() >= gb.branch.s_size());
	}
}

TEST_CASE("stage one alone is enough once the incumbent clears the guard") {
	for (int trial = 0; trial < 30; ++trial) {
		int n = 7 + trial % 10;
		double p = (trial % 2 == 0) ? 0.5 : 0.8;
		int k = trial % 4;
		Graph g = er_graph(n, p, 8300 + trial);
		SolverConfig cfg = make_cfg(k, BoundKind::double_coloring, BranchingRule::bs_three, true);
		SolveReport normal = solve(g, cfg);
		if (normal.stage != StageOutcome::stage1_sufficient) continue;
		SolverConfig forced = cfg;
		forced.verify_stage2 = true;
		SolveReport rep = solve(g, forced);
		CHECK(rep.best.size() == normal.best.size());
		CHECK(rep.stage == StageOutcome::stage1_sufficient);
	}
}

TEST_CASE("identical configuration and seed reproduce the identical report") {
	Graph g = er_graph(14, 0.5, 777);
	for (SecondOrder ord : {SecondOrder::memory, SecondOrder::random, SecondOrder::peel_rev}) {
		SolverConfig cfg = make_cfg(3, BoundKind::double_coloring, BranchingRule::bs_three, true);
		cfg.second_order = ord;
		cfg.seed = 123;
		SolveReport a = solve(g, cfg);
		SolveReport b = solve(g, cfg);
		CHECK(a.best.vertices == b.best.vertices);
		CHECK(a.branches_explored == b.branches_explored);
		CHECK(a.ir_calls == b.ir_calls);
		CHECK(a.bound_prunes == b.bound_prunes);
		CHECK(a.reductions_applied == b.reductions_applied);
		CHECK(a.stage == b.stage);
		CHECK_FALSE(a.timed_out);
	}
}

TEST_CASE("the time limit unwinds cleanly with a usable incumbent") {
	Graph g = er_graph(100, 0.5, 31);
	SolverConfig cfg = make_cfg(4, BoundKind::double_coloring, BranchingRule::bs_three, true);
	cfg.use_heuristic_seed = true;
	cfg.time_limit = std::chrono::milliseconds(10);
	SolveReport rep = solve(g, cfg);
	CHECK(rep.timed_out);
	CHECK(rep.best.size() >= 1);
	CHECK(count_nonedges(g, rep.best.vertices) <= 4);
	// Unwinding must be prompt: far below a second on this budget.
	CHECK(rep.wall_time.count() < 5000);
}
