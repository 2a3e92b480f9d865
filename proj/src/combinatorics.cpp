#include "orchard/combinatorics.hpp"

#include <algorithm>

#include "orchard/error.hpp"

namespace orchard {

std::uint64_t binom(long a, long b) {
    if (a < 0 || b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    std::uint64_t r = 1;
    for (long i = 1; i <= b; ++i) {
        // exact at every step: r * (a-b+i) is divisible by i
        r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

bool binom_odd(long a, long b) {
    if (a < 0 || b < 0 || b > a)
        return false;
    return (static_cast<std::uint64_t>(b) & ~static_cast<std::uint64_t>(a)) == 0;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        pool[static_cast<size_t>(i)] = i + 1;
    for_each_subset_of(pool, k, visit);
}

void for_each_subset_of(const std::vector<int>& pool, int k,
                        const std::function<void(const std::vector<int>&)>& visit) {
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        visit({});
        return;
    }
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<size_t>(i)] = i;
    std::vector<int> subset(static_cast<size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i)
            subset[static_cast<size_t>(i)] = pool[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        visit(subset);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

int sort_parity(std::vector<int> values) {
    int parity = 1;
    const size_t n = values.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (values[i] > values[j])
                parity = -parity;
    return parity;
}

} // namespace orchard
