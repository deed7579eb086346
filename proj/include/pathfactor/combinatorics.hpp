#pragma once

#include <numeric>
#include <vector>

namespace pathfactor {

// Visit the k-element subsets of {0..n-1} in lexicographic order.
// The callback returns true to stop early; the function reports whether it did.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return false;
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
        if (fn(static_cast<const std::vector<int>&>(combo))) return true;
        int i = k - 1;
        while (i >= 0 && combo[i] == n - k + i) --i;
        if (i < 0) return false;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
}

// Visit every subset of {0..n-1} ordered by cardinality, lexicographic
// inside each cardinality.
template <typename Fn>
bool for_each_subset_by_size(int n, Fn&& fn) {
    for (int k = 0; k <= n; ++k)
        if (for_each_combination(n, k, fn)) return true;
    return false;
}

}  // namespace pathfactor
