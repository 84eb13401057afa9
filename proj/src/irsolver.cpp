#include "kdefect/irsolver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kdefect {

BucketQueue::BucketQueue(int n, int max_key)
	: head_(max_key + 1, -1), next_(n, -1), prev_(n, -1), key_(n, -1) {}

void BucketQueue::push(int v, int key) {
	key_[v] = key;
	next_[v] = head_[key];
	prev_[v] = -1;
	if (head_[key] >= 0) prev_[head_[key]] = v;
	head_[key] = v;
	++size_;
	if (key < min_ptr_) {
		regressed_ = true;
		min_ptr_ = key;
	}
}

void BucketQueue::unlink(int v) {
	if (prev_[v] >= 0)
		next_[prev_[v]] = next_[v];
	else
		head_[key_[v]] = next_[v];
	if (next_[v] >= 0) prev_[next_[v]] = prev_[v];
}

void BucketQueue::remove(int v) {
	unlink(v);
	key_[v] = -1;
	--size_;
}

void BucketQueue::increase_key(int v, int new_key) {
	unlink(v);
	--size_;
	push(v, new_key);
}

int BucketQueue::min_key() {
	while (min_ptr_ < static_cast<int>(head_.size()) && head_[min_ptr_] < 0) ++min_ptr_;
	if (min_ptr_ >= static_cast<int>(head_.size()))
		throw std::logic_error("min_key on an empty bucket queue");
	return min_ptr_;
}

bool is_missing_two_deg(const Branch& b) {
	if (is_trivially_solved(b)) return true;
	for (int v : b.c_list)
		if (b.dbar_c[v] > 2) return false;
	return true;
}

IrResult ir_solve(const Branch& b) {
	if (!is_missing_two_deg(b))
		throw std::logic_error("ir_solve requires a branch accepted by is_missing_two_deg");
	IrResult r;
	if (is_trivially_solved(b)) {
		r.stats.trivially_solved = true;
		r.vertices = b.s_list;
		r.vertices.insert(r.vertices.end(), b.c_list.begin(), b.c_list.end());
		std::sort(r.vertices.begin(), r.vertices.end());
		return r;
	}

	const Graph& g = *b.g;
	const int n = g.n;
	std::vector<int> dbar_s = b.dbar_s;
	std::vector<int> dbar_c = b.dbar_c;
	int nonedges = b.nonedges_s;

	std::vector<char> in_c(n, 0);
	for (int v : b.c_list) in_c[v] = 1;

	// Complement adjacency restricted to C, at most two entries per vertex
	// since every candidate has dbar_c <= 2 on this path. Built once up
	// front; vertices that later leave C are skipped via in_c.
	Bitset c_mask(n);
	for (int v : b.c_list) c_mask.set(v);
	std::vector<int> comp(2 * static_cast<std::size_t>(n), -1);
	std::vector<int> comp_deg(n, 0);
	auto cw = c_mask.words();
	for (int v : b.c_list) {
		auto aw = g.adj_bits[v].words();
		for (std::size_t wi = 0; wi < cw.size(); ++wi) {
			std::uint64_t w = cw[wi] & ~aw[wi];
			while (w) {
				int u = static_cast<int>(wi * 64) + std::countr_zero(w);
				w &= w - 1;
				if (u == v) continue;
				if (comp_deg[v] == 2)
					throw std::logic_error("candidate counters out of sync");
				comp[2 * static_cast<std::size_t>(v) + comp_deg[v]++] = u;
			}
		}
	}

	BucketQueue q(n, 3 * (b.s_size() + b.c_size()));
	for (int v : b.c_list) q.push(v, 3 * dbar_s[v] + dbar_c[v]);

	while (!q.empty()) {
		int mk = q.min_key();
		int v_star = -1;
		if (mk % 3 <= 1) {
			// The minimum bucket jointly minimizes dbar_s and dbar_c; any
			// member fits, smallest id for determinism.
			++r.stats.case1;
			for (int v = q.bucket_first(mk); v >= 0; v = q.bucket_next(v))
				if (v_star < 0 || v < v_star) v_star = v;
		} else {
			// All of the minimum-dbar_s tier sits in this one bucket with
			// dbar_c = 2; pick the member with the fewest non-neighbors
			// inside the tier.
			++r.stats.case2;
			int best = -1;
			for (int v = q.bucket_first(mk); v >= 0; v = q.bucket_next(v)) {
				int d = 0;
				for (int j = 0; j < comp_deg[v]; ++j) {
					int u = comp[2 * static_cast<std::size_t>(v) + j];
					if (in_c[u] && q.key_of(u) == mk) ++d;
				}
				if (best < 0 || d < best || (d == best && v < v_star)) {
					best = d;
					v_star = v;
				}
			}
		}
		// v_star carries the minimum dbar_s over C, so when it does not
		// fit the budget no remaining candidate does.
		if (nonedges + dbar_s[v_star] > b.k) break;
		nonedges += dbar_s[v_star];
		q.remove(v_star);
		in_c[v_star] = 0;
		r.picked.push_back(v_star);
		++r.stats.included;
		for (int j = 0; j < comp_deg[v_star]; ++j) {
			int u = comp[2 * static_cast<std::size_t>(v_star) + j];
			if (!in_c[u]) continue;
			++dbar_s[u];
			--dbar_c[u];
			q.increase_key(u, 3 * dbar_s[u] + dbar_c[u]);
		}
	}

	r.stats.monotone_min = !q.min_ever_decreased();
	r.vertices = b.s_list;
	r.vertices.insert(r.vertices.end(), r.picked.begin(), r.picked.end());
	std::sort(r.vertices.begin(), r.vertices.end());
	return r;
}

}  // namespace kdefect
