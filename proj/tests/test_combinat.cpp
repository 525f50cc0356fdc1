#include <gtest/gtest.h>

#include <map>
#include <set>

#include <symchar/combinat.hpp>

using namespace symchar;

namespace {

// Partitions of n with every part <= k, by the textbook recurrence.
long count_partitions(int n, int k, std::map<std::pair<int, int>, long>& memo)
{
    if (n == 0) return 1;
    if (k == 0) return 0;
    auto key = std::make_pair(n, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long r = count_partitions(n, k - 1, memo) + (n >= k ? count_partitions(n - k, k, memo) : 0);
    return memo[key] = r;
}

} // namespace

TEST(Partition, RejectsInvalidParts)
{
    EXPECT_THROW(Partition({2, 3}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_THROW(Partition({-1}), std::invalid_argument);
    EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 2}), Partition({3, 2, 1}));
}

TEST(Partition, SizeAndConjugate)
{
    Partition p{4, 2, 2, 1};
    EXPECT_EQ(p.size(), 9);
    EXPECT_EQ(p.length(), 4);
    EXPECT_EQ(p.conjugate(), Partition({4, 3, 1, 1}));
    EXPECT_EQ(p.conjugate().conjugate(), p);
    EXPECT_EQ(Partition{}.size(), 0);
    EXPECT_EQ(merge(Partition{3, 1}, Partition{2, 2}), Partition({3, 2, 2, 1}));
    EXPECT_EQ(Partition({2, 1}).scaled(3), Partition({6, 3}));
}

TEST(PartitionsOf, SmallCases)
{
    auto p0 = partitions_of(0);
    ASSERT_EQ(p0.size(), 1u);
    EXPECT_TRUE(p0[0].empty());
    std::vector<Partition> three{{3}, {2, 1}, {1, 1, 1}};
    EXPECT_EQ(partitions_of(3), three);
    EXPECT_EQ(partitions_of(8).size(), 22u);
}

TEST(PartitionsOf, CountsMatchRecurrenceAndAreDistinct)
{
    std::map<std::pair<int, int>, long> memo;
    for (int n = 0; n <= 30; ++n) {
        auto ps = partitions_of(n);
        EXPECT_EQ(static_cast<long>(ps.size()), count_partitions(n, n, memo)) << n;
        std::set<Partition> seen(ps.begin(), ps.end());
        EXPECT_EQ(seen.size(), ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            EXPECT_EQ(ps[i].size(), n);
            if (i) {
                EXPECT_TRUE(ps[i] < ps[i - 1]) << "reverse lexicographic order";
            }
        }
    }
}

TEST(ZOf, Examples)
{
    EXPECT_EQ(z_of({1, 1, 1}), 6);
    EXPECT_EQ(z_of({2, 1}), 2);
    EXPECT_EQ(z_of({6}), 6);
    EXPECT_EQ(z_of({2, 2, 1}), 8);
}

TEST(ZOf, ClassSizesSumToFactorial)
{
    for (int n = 1; n <= 30; ++n) {
        Integer total = 0;
        for (const auto& l : partitions_of(n)) total += factorial(n) / z_of(l);
        EXPECT_EQ(total, factorial(n)) << n;
    }
}

TEST(ExponentialForm, RoundTrip)
{
    for (int n = 0; n <= 20; ++n)
        for (const auto& l : partitions_of(n)) {
            ExponentialForm ef(l);
            EXPECT_EQ(ef.to_partition(), l);
            EXPECT_EQ(ef.size(), n);
            EXPECT_EQ(ef.length(), l.length());
        }
    ExponentialForm ef(Partition{3, 3, 1});
    EXPECT_EQ(ef.multiplicity(3), 2);
    EXPECT_EQ(ef.multiplicity(2), 0);
    EXPECT_EQ(ef.support_count(), 2);
}

TEST(Moebius, Examples)
{
    EXPECT_EQ(moebius(1), 1);
    EXPECT_EQ(moebius(4), 0);
    EXPECT_EQ(moebius(6), 1);
    EXPECT_EQ(moebius(30), -1);
    EXPECT_THROW(moebius(0), std::invalid_argument);
}

TEST(Moebius, DivisorSumsVanish)
{
    for (long n = 1; n <= 1000; ++n) {
        int s = 0;
        for (long d : divisors(n)) s += moebius(d);
        EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
    }
}

TEST(Divisors, MatchTrialDivision)
{
    EXPECT_EQ(divisors(1), std::vector<long>{1});
    EXPECT_EQ(divisors(6), (std::vector<long>{1, 2, 3, 6}));
    EXPECT_EQ(divisors(12), (std::vector<long>{1, 2, 3, 4, 6, 12}));
    for (long n = 1; n <= 300; ++n) {
        std::vector<long> brute;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) brute.push_back(d);
        EXPECT_EQ(divisors(n), brute);
    }
}

TEST(ClassRepresentative, HasRequestedCycleType)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& l : partitions_of(n)) EXPECT_EQ(cycle_type(class_representative(l)), l);
    EXPECT_EQ(class_representative({3, 2}), (std::vector<int>{1, 2, 0, 4, 3}));
}
