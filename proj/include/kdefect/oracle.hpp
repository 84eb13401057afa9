#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "kdefect/bounds.hpp"
#include "kdefect/branch.hpp"
#include "kdefect/graph.hpp"

namespace kdefect {

// Instance too large for exhaustive enumeration. Hard error so a misplaced
// oracle call cannot silently burn hours.
struct OracleSizeError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Exhaustive reference solver: the largest set with at most k missing pairs
// among all supersets of `required`. n is capped at 24. Among maximum sets
// the lexicographically smallest vertex list is returned.
std::vector<int> brute_force_max_kdc(const Graph& g, int k, std::span<const int> required = {});

// Exhaustive check value for the budget-constrained flow: the largest
// candidate subset D whose color-collision pairs plus dbar_s total stays
// within the budget, i.e. max |D| with
//   (pairs of D sharing a color in either coloring) + sum dbar_s(D) <= budget.
// Guarded at 18 candidates.
int brute_force_flow_oracle(const Branch& b, const ColorAssignment& ca, int budget);

// Extended precision for the root fields: both roots approach 2 like
// c·2^-k and their gap is 2^-(k+3), which drops below the double spacing
// at 2 (2^-52) near k = 48. The 113-bit format keeps every root strictly
// inside (1, 2) and strictly ordered through k = 64.
using Real128 = __float128;

// Largest real roots in (1, 2) of the two branching-recurrence polynomials
//   x^{k+4} - 2x^{k+3} + x^3 - x + 1   (lambda)
//   x^{k+3} - 2x^{k+2} + x^2 - x + 1   (gamma)
// found by bisection on the equivalent strictly decreasing forms
//   f(x) = sum_{i=1..k} x^{-i} + x^{-(k+3)} - 1   (lambda; gamma uses k+2).
struct RootResult {
	int k = 0;
	Real128 lambda_k = 0;
	Real128 gamma_k = 0;
	double lambda_residual = 0;  // f value at the returned root
	double gamma_residual = 0;

	double lambda() const { return static_cast<double>(lambda_k); }
	double gamma() const { return static_cast<double>(gamma_k); }
	double two_minus_lambda() const { return static_cast<double>(Real128(2) - lambda_k); }
	double two_minus_gamma() const { return static_cast<double>(Real128(2) - gamma_k); }
};

RootResult characteristic_roots(int k);

}  // namespace kdefect
