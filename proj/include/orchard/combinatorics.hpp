#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace orchard {

// Binomial convention used throughout: C(a,b) = 0 when a < 0, b < 0 or
// b > a, and C(a,0) = 1 for a >= 0. This makes the small-n cases total.

std::uint64_t binom(long a, long b);

/// Parity of C(a,b) under the same convention (Lucas, base 2).
bool binom_odd(long a, long b);

/// Visit every strictly increasing k-subset of {1..n} in lexicographic
/// order. The callback receives the current subset as 1-based labels.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

/// Same, over an arbitrary sorted pool of labels.
void for_each_subset_of(const std::vector<int>& pool, int k,
                        const std::function<void(const std::vector<int>&)>& visit);

/// Parity of the permutation sorting `values` ascending: +1 even, -1 odd.
int sort_parity(std::vector<int> values);

} // namespace orchard
