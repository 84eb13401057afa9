#pragma once

#include "kdefect/branch.hpp"

namespace kdefect {

// Intrusive bucket priority queue keyed by key(v) = 3*dbar_s(v) + dbar_c(v).
// With dbar_c <= 2 the key orders (dbar_s, dbar_c) pairs lexicographically,
// so the lowest non-empty bucket holds exactly the candidates minimizing
// dbar_s and, within those, dbar_c. Keys only increase during a greedy run
// (each inclusion bumps a non-neighbor's dbar_s and drops its dbar_c, a net
// +2), so the minimum pointer only advances.
class BucketQueue {
public:
	// Vertex ids in [0, n); keys in [0, max_key].
	BucketQueue(int n, int max_key);

	void push(int v, int key);
	void remove(int v);
	void increase_key(int v, int new_key);

	bool empty() const { return size_ == 0; }
	int size() const { return size_; }
	bool contains(int v) const { return key_[v] >= 0; }
	int key_of(int v) const { return key_[v]; }

	// Lowest non-empty bucket index; advances the minimum pointer. Queue
	// must be non-empty.
	int min_key();

	// Bucket iteration: first(v) = -1 when empty, next(v) = -1 at the end.
	int bucket_first(int key) const { return head_[key]; }
	int bucket_next(int v) const { return next_[v]; }

	// True if any push or key change ever landed below the advanced minimum
	// pointer; stays false across a well-formed greedy run.
	bool min_ever_decreased() const { return regressed_; }

private:
	void unlink(int v);

	std::vector<int> head_;
	std::vector<int> next_, prev_, key_;
	int min_ptr_ = 0;
	int size_ = 0;
	bool regressed_ = false;
};

struct IrStats {
	int case1 = 0;            // rounds resolved by smallest dbar_c
	int case2 = 0;            // rounds resolved inside the minimum bucket
	int included = 0;         // greedy inclusions
	bool trivially_solved = false;
	bool monotone_min = true; // minimum bucket index never moved backward
};

struct IrResult {
	std::vector<int> vertices;  // solution in branch-local ids, sorted
	std::vector<int> picked;    // greedy inclusions in selection order
	IrStats stats;
};

// True iff the whole branch already fits the budget or every candidate has
// at most two non-neighbors among the candidates. Branches in this state
// are solved exactly by ir_solve.
bool is_missing_two_deg(const Branch& b);

// Exact polynomial-time solution of a branch accepted by
// is_missing_two_deg: returns the largest feasible S-containing vertex set
// inside S united with C. The branch is not mutated. Throws
// std::logic_error when the precondition fails.
IrResult ir_solve(const Branch& b);

}  // namespace kdefect
