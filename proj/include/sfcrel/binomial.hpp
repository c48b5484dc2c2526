#pragma once

#include <cstdint>

namespace sfcrel {

// Exact C(k, i) for 0 <= i <= k <= 64 from Pascal's rule; 0 outside that
// triangle. Throws std::out_of_range when k > 64.
std::uint64_t binomial(int k, int i);

// Probability of exactly `failures` failures among `k` independent
// components that each survive with probability `p`:
// C(k, failures) (1-p)^failures p^(k-failures).
double binom_term(int k, int failures, double p);

// Sum of binom_term(k, i, p) for i in [lo, min(hi, k)], accumulated in
// ascending i. An empty range (lo > min(hi, k)) sums to 0; lo below 0 is
// treated as 0. Throws std::out_of_range when k is negative or above 64.
double binom_sum(int k, int lo, int hi, double p);

}  // namespace sfcrel
