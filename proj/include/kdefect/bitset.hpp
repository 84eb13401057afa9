#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace kdefect {

// Fixed-width bit vector backing the O(1) adjacency tests and the
// word-at-a-time set intersections the counters are built from.
class Bitset {
public:
	Bitset() = default;
	explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

	void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
	void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
	bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
	int size() const { return n_; }

	int count() const {
		int c = 0;
		for (std::uint64_t w : w_) c += std::popcount(w);
		return c;
	}

	// |this ∩ other|; both bitsets must cover the same universe.
	int count_and(const Bitset& other) const {
		int c = 0;
		std::size_t k = std::min(w_.size(), other.w_.size());
		for (std::size_t i = 0; i < k; ++i) c += std::popcount(w_[i] & other.w_[i]);
		return c;
	}

	std::span<const std::uint64_t> words() const { return w_; }

private:
	int n_ = 0;
	std::vector<std::uint64_t> w_;
};

}  // namespace kdefect
