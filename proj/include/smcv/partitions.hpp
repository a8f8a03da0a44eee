#pragma once

// Lexicographic enumeration of set partitions (as restricted-growth strings)
// and of k-subsets.

#include <stdexcept>
#include <vector>

namespace smcv {

/// Restricted-growth strings of length n with exactly k distinct values,
/// visited in lexicographic order. a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
class RestrictedGrowthStrings {
public:
    RestrictedGrowthStrings(int n, int k) : n_(n), k_(k), a_(static_cast<std::size_t>(n), 0), prefix_max_(a_.size(), 0) {
        if (n < 1 || k < 1 || k > n) throw std::invalid_argument("restricted growth strings need 1 <= k <= n");
        fill_from(1, 0);
    }

    const std::vector<int>& current() const noexcept { return a_; }

    /// Advances to the lexicographic successor; false when exhausted.
    bool next() {
        for (int i = n_ - 1; i >= 1; --i) {
            const int before = prefix_max_[i - 1];
            const int candidate = a_[i] + 1;
            if (candidate > before + 1 || candidate >= k_) continue;
            const int m = std::max(before, candidate);
            // blocks still to open must fit in the remaining positions
            if (k_ - (m + 1) > n_ - i - 1) continue;
            a_[i] = candidate;
            prefix_max_[i] = m;
            fill_from(i + 1, m);
            return true;
        }
        return false;
    }

private:
    // Smallest completion of positions [from, n) reaching exactly k blocks.
    void fill_from(int from, int max_so_far) {
        const int remaining = n_ - from;
        const int to_open = k_ - (max_so_far + 1);
        int m = max_so_far;
        for (int i = from; i < n_; ++i) {
            if (i - from < remaining - to_open) {
                a_[i] = 0;
            } else {
                a_[i] = ++m;
            }
            prefix_max_[i] = m;
        }
    }

    int n_;
    int k_;
    std::vector<int> a_;
    std::vector<int> prefix_max_;
};

/// Calls f(rgs) for every partition of n elements into exactly k blocks, in
/// lexicographic order, until f returns true. Returns whether f stopped it.
template <typename F>
bool for_each_partition(int n, int k, F&& f) {
    RestrictedGrowthStrings rgs(n, k);
    do {
        if (f(rgs.current())) return true;
    } while (rgs.next());
    return false;
}

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order,
/// until f returns true. Returns whether f stopped it.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (f(static_cast<const std::vector<int>&>(idx))) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace smcv
