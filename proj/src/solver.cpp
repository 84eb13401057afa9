#include "kdefect/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdefect/irsolver.hpp"

namespace kdefect {

void SolverConfig::validate() const {
	if (k < 0) throw std::invalid_argument("negative defectiveness budget");
	if (time_limit.count() < 0) throw std::invalid_argument("negative time limit");
	if (!early_termination && branching == BranchingRule::bs_three)
		throw std::invalid_argument(
		    "three-non-neighbor branching requires early termination");
}

std::optional<int> select_pivot_bs_three(const Branch& b) {
	int with_s = -1, plain = -1;
	for (int v : b.c_list) {
		if (b.dbar_c[v] < 3) continue;
		if (b.dbar_s[v] >= 1) {
			if (with_s < 0 || v < with_s) with_s = v;
		} else if (plain < 0 || v < plain) {
			plain = v;
		}
	}
	if (with_s >= 0) return with_s;
	if (plain >= 0) return plain;
	return std::nullopt;
}

std::optional<int> select_pivot_baseline(const Branch& b) {
	int with_s = -1, plain = -1;
	for (int v : b.c_list) {
		if (b.dbar_s[v] >= 1) {
			if (with_s < 0 || v < with_s) with_s = v;
		} else if (plain < 0 || v < plain) {
			plain = v;
		}
	}
	if (with_s >= 0) return with_s;
	if (plain >= 0) return plain;
	return std::nullopt;
}

namespace {

struct SearchContext {
	const SolverConfig* cfg = nullptr;
	const Subgraph* sub = nullptr;
	DegeneracyOrder ord;  // of sub->graph, shared by every bound call
	Incumbent* inc = nullptr;
	SolveReport* rep = nullptr;
	std::chrono::steady_clock::time_point deadline;
	bool has_deadline = false;
	bool timed_out = false;
	long long entries = 0;

	void maybe_update(const std::vector<int>& local_vertices) {
		if (static_cast<int>(local_vertices.size()) <= inc->size()) return;
		std::vector<int> parent;
		parent.reserve(local_vertices.size());
		for (int v : local_vertices) parent.push_back(sub->to_parent[v]);
		std::sort(parent.begin(), parent.end());
		inc->vertices = std::move(parent);
	}

	void update_with_all(const Branch& b) {
		std::vector<int> all = b.s_list;
		all.insert(all.end(), b.c_list.begin(), b.c_list.end());
		maybe_update(all);
	}

	int upper_bound(const Branch& b) {
		if (cfg->bound == BoundKind::double_coloring)
			return ub_double(b, ord, cfg->second_order, cfg->seed);
		ColorAssignment ca = color_first(b, ord);
		return ub_single(b, ca);
	}

	void rec(const Branch& b) {
		if (timed_out) return;
		++rep->branches_explored;
		if (has_deadline && (++entries & 1023) == 0 &&
		    std::chrono::steady_clock::now() > deadline) {
			timed_out = true;
			return;
		}

		if (upper_bound(b) <= inc->size()) {
			++rep->bound_prunes;
			return;
		}

		Branch r = reduce(b, inc->size());
		rep->reductions_applied += b.c_size() - r.c_size();

		if (cfg->early_termination && is_missing_two_deg(r)) {
			++rep->ir_calls;
			IrResult ir = ir_solve(r);
			maybe_update(ir.vertices);
			return;
		}
		if (is_trivially_solved(r)) {
			update_with_all(r);
			return;
		}

		std::optional<int> pivot = cfg->branching == BranchingRule::bs_three
		                               ? select_pivot_bs_three(r)
		                               : select_pivot_baseline(r);
		if (!pivot) {
			// Unreachable through the states above; close out soundly.
			update_with_all(r);
			return;
		}
		int v = *pivot;
		if (r.nonedges_s + r.dbar_s[v] <= r.k) rec(include_pivot(r, v));
		if (timed_out) return;
		rec(exclude_pivot(r, v));
	}
};

}  // namespace

void bbres_rec(const Branch& b, const Subgraph& sub, const SolverConfig& cfg,
               Incumbent& inc, SolveReport& report) {
	cfg.validate();
	if (b.g != &sub.graph)
		throw std::invalid_argument("branch does not point into the subgraph");
	SearchContext ctx;
	ctx.cfg = &cfg;
	ctx.sub = &sub;
	ctx.ord = degeneracy_order(sub.graph);
	ctx.inc = &inc;
	ctx.rep = &report;
	if (cfg.time_limit.count() > 0) {
		ctx.has_deadline = true;
		ctx.deadline = std::chrono::steady_clock::now() + cfg.time_limit;
	}
	ctx.rec(b);
	if (ctx.timed_out) report.timed_out = true;
}

Incumbent heuristic_seed(const Graph& g, const DegeneracyOrder& ord, int k) {
	Incumbent inc;
	std::vector<int>& set = inc.vertices;
	int nonedges = 0;
	for (int i = g.n - 1; i >= 0; --i) {
		int v = ord.order[i];
		int added = 0;
		for (int u : set)
			if (!g.has_edge(u, v)) ++added;
		if (nonedges + added <= k) {
			set.push_back(v);
			nonedges += added;
		}
	}
	std::sort(set.begin(), set.end());
	return inc;
}

SolveReport solve(const Graph& g, const SolverConfig& cfg) {
	cfg.validate();
	auto t0 = std::chrono::steady_clock::now();
	std::chrono::steady_clock::time_point deadline;
	bool has_deadline = cfg.time_limit.count() > 0;
	if (has_deadline) deadline = t0 + cfg.time_limit;

	SolveReport rep;
	DegeneracyOrder gord = degeneracy_order(g);
	Incumbent inc;
	if (cfg.use_heuristic_seed) inc = heuristic_seed(g, gord, cfg.k);

	auto run_root = [&](const Subgraph& sub, std::span<const int> s0) {
		Branch root = make_root(sub.graph, s0, cfg.k);
		SearchContext ctx;
		ctx.cfg = &cfg;
		ctx.sub = &sub;
		ctx.ord = degeneracy_order(sub.graph);
		ctx.inc = &inc;
		ctx.rep = &rep;
		ctx.has_deadline = has_deadline;
		ctx.deadline = deadline;
		ctx.rec(root);
		if (ctx.timed_out) rep.timed_out = true;
	};

	for (int i = 0; i < g.n && !rep.timed_out; ++i) {
		// Each root polls internally every 1024 entries; this catches the
		// many-small-roots case where no single root reaches a poll.
		if (has_deadline && std::chrono::steady_clock::now() > deadline) {
			rep.timed_out = true;
			break;
		}
		int v = gord.order[i];
		std::vector<int> verts = two_hop_suffix_vertices(g, gord, v);
		// A rooted subproblem cannot beat an incumbent at least as large
		// as its whole vertex pool.
		if (static_cast<int>(verts.size()) <= inc.size()) continue;
		Subgraph sub = induced_subgraph(g, verts);
		int local_v = static_cast<int>(
		    std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
		std::vector<int> s0 = {local_v};
		run_root(sub, s0);
	}

	bool need_stage2 = inc.size() < cfg.k + 1;
	if (!rep.timed_out && (need_stage2 || cfg.verify_stage2)) {
		if (need_stage2) rep.stage = StageOutcome::stage2_needed;
		Subgraph whole = whole_graph(g);
		run_root(whole, {});
	}

	rep.best = inc;
	rep.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
	    std::chrono::steady_clock::now() - t0);
	return rep;
}

}  // namespace kdefect
