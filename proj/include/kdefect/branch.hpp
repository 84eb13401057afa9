#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

enum class Membership : std::uint8_t { out = 0, in_s = 1, in_c = 2 };

// One search node (g, S, C): grow S from C, allowing at most k missing pairs
// inside the final set. Counters:
//   nonedges_s  = missing pairs inside S
//   dbar_s[v]   = non-neighbors of v in S       (maintained for v in C)
//   dbar_c[v]   = non-neighbors of v in C \ {v} (maintained for v in C)
// Entries for vertices no longer in C are stale; member is authoritative.
struct Branch {
	const Graph* g = nullptr;
	int k = 0;
	std::vector<int> s_list;  // insertion order
	std::vector<int> c_list;  // insertion order, stable under removals
	std::vector<Membership> member;
	std::vector<int> dbar_s;
	std::vector<int> dbar_c;
	int nonedges_s = 0;

	int s_size() const { return static_cast<int>(s_list.size()); }
	int c_size() const { return static_cast<int>(c_list.size()); }
	bool in_c(int v) const { return member[v] == Membership::in_c; }
	bool in_s(int v) const { return member[v] == Membership::in_s; }

	// Missing pairs in S ∪ C; the dbar_c sum counts each pair twice.
	long long total_nonedges() const;
};

// Counters by direct counting; S0 must induce at most k missing pairs.
// The branch keeps a pointer to g, so g must outlive every branch derived
// from it; the rvalue overload is deleted to reject temporaries.
Branch make_root(const Graph& g, std::span<const int> s0, int k);
Branch make_root(Graph&& g, std::span<const int> s0, int k) = delete;

// Child with v moved into S. Requires nonedges_s + dbar_s[v] <= k.
Branch include_pivot(const Branch& b, int v);

// Child with v dropped from C.
Branch exclude_pivot(const Branch& b, int v);

// Removes every v in C that can no longer join S within budget
// (nonedges_s + dbar_s[v] > k). Removals leave dbar_s untouched, so one
// sweep reaches the fixpoint. incumbent_size is reserved for stronger
// rules; the always-on rule does not read it.
Branch reduce(Branch b, int incumbent_size);

// True iff S ∪ C as a whole is within budget.
bool is_trivially_solved(const Branch& b);

// Best solution seen so far, in the ids of the graph solve() was given.
struct Incumbent {
	std::vector<int> vertices;
	int size() const { return static_cast<int>(vertices.size()); }
};

}  // namespace kdefect
