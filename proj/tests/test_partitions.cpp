#include <gtest/gtest.h>

#include <set>

#include <smcv/partitions.hpp>

#include "oracles.hpp"

using namespace smcv;

TEST(RestrictedGrowth, CountsMatchStirlingNumbers) {
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            int count = 0;
            for_each_partition(n, k, [&](const std::vector<int>&) {
                ++count;
                return false;
            });
            EXPECT_EQ(count, oracle::stirling2(n, k)) << "n=" << n << " k=" << k;
        }
}

TEST(RestrictedGrowth, LexicographicValidAndDistinct) {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<int> prev;
            for_each_partition(n, k, [&](const std::vector<int>& a) {
                EXPECT_EQ(a[0], 0);
                int mx = 0;
                for (int i = 1; i < n; ++i) {
                    EXPECT_LE(a[i], mx + 1);
                    mx = std::max(mx, a[i]);
                }
                EXPECT_EQ(mx + 1, k);
                if (!prev.empty()) EXPECT_LT(prev, a);
                prev = a;
                return false;
            });
        }
}

// Same set of partitions as the recursive oracle generator.
TEST(RestrictedGrowth, AgreesWithRecursiveGenerator) {
    const int n = 6;
    std::set<std::vector<int>> expected;
    oracle::partitions(n, [&](const std::vector<int>& label, int) { expected.insert(label); });
    std::set<std::vector<int>> got;
    for (int k = 1; k <= n; ++k)
        for_each_partition(n, k, [&](const std::vector<int>& a) {
            got.insert(a);
            return false;
        });
    EXPECT_EQ(got, expected);
}

TEST(RestrictedGrowth, FirstAndLast) {
    RestrictedGrowthStrings rgs(5, 3);
    EXPECT_EQ(rgs.current(), (std::vector<int>{0, 0, 0, 1, 2}));
    std::vector<int> last;
    do last = rgs.current();
    while (rgs.next());
    EXPECT_EQ(last, (std::vector<int>{0, 1, 2, 2, 2}));
    EXPECT_THROW(RestrictedGrowthStrings(3, 4), std::invalid_argument);
}

TEST(RestrictedGrowth, EarlyStop) {
    int seen = 0;
    const bool stopped = for_each_partition(6, 3, [&](const std::vector<int>&) { return ++seen == 5; });
    EXPECT_TRUE(stopped);
    EXPECT_EQ(seen, 5);
}

TEST(Combinations, CountAndOrder) {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            long long count = 0;
            std::vector<int> prev;
            bool first = true;
            for_each_combination(n, k, [&](const std::vector<int>& idx) {
                ++count;
                for (std::size_t i = 1; i < idx.size(); ++i) EXPECT_LT(idx[i - 1], idx[i]);
                if (!first) EXPECT_LT(prev, idx);
                first = false;
                prev = idx;
                return false;
            });
            long long binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            EXPECT_EQ(count, binom);
        }
}
