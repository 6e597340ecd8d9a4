#include <map>
#include <tuple>

#include <gtest/gtest.h>

#include "sepcount/ncycle.hpp"
#include "sepcount/oracle.hpp"
#include "sepcount/plane_permutation.hpp"
#include "support.hpp"

using namespace sepcount;

namespace {

integer_partition P(const char* text) { return parse_partition(text); }

} // namespace

TEST(Oracle, HandExamples) {
    EXPECT_EQ(oracle_p(P("3"), 0, 1), 2);
    EXPECT_EQ(oracle_p(P("4"), 2, 2), 16);
    EXPECT_EQ(oracle_i(P("4"), 1, 2), 6);
    for (int n = 1; n <= 6; ++n) {
        auto ones = integer_partition::ones(n);
        for (int m = 0; m <= std::min(n, 1); ++m)
            EXPECT_EQ(oracle_p(ones, m, 1), factorial(n - 1)) << n;
        for (int m = 2; m <= n; ++m)
            EXPECT_EQ(oracle_p(ones, m, 1), 0);
    }
}

TEST(Oracle, StratifiedByExceedances) {
    auto s = oracle_p_stratified(P("3"), 0, 3);
    EXPECT_EQ(s, (std::map<int, BigInt>{{0, 2}}));
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (int k = 1; k <= n; ++k) {
                    BigInt total = 0;
                    for (auto& [a, c] : oracle_p_stratified(lambda, m, k))
                        total += c;
                    ASSERT_EQ(total, oracle_p(lambda, m, k));
                }
}

TEST(Oracle, IsolatedQueries) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int k = 1; k <= n; ++k)
                EXPECT_EQ(oracle_i(lambda, 0, k), oracle_p(lambda, 0, k));
            // Fixing all of [n] forces pi = id and hence D = s, an n-cycle.
            BigInt expected = lambda == integer_partition::single(n) ? factorial(n - 1) : BigInt(0);
            EXPECT_EQ(oracle_i(lambda, n, n), expected) << lambda.to_string();
        }
    }
}

TEST(Oracle, TotalsCountEveryPlanePermutationOnce) {
    for (int n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (const auto& lambda : partitions_of(n))
            for (int k = 1; k <= n; ++k)
                total += oracle_p(lambda, 0, k);
        EXPECT_EQ(total, factorial(n - 1) * factorial(n));
        EXPECT_EQ(default_oracle().census(n).total(), factorial(n - 1) * factorial(n));
    }
}

TEST(Oracle, CensusAgreesWithDirectClassification) {
    // Same tallies computed through the value-level plane permutation API.
    for (int n = 1; n <= 5; ++n) {
        std::map<std::tuple<integer_partition, integer_partition, int, int, int>, long> direct;
        testing_support::for_each_plane_permutation(n, [&](const plane_permutation& pp) {
            const auto& pi = pp.vertical();
            int sep = 0;
            while (sep < n && separates(pi, sep + 1))
                ++sep;
            int fix = 0;
            while (fix < n && isolates(pi, fix + 1))
                ++fix;
            ++direct[{cycle_type(diagonal(pp)), cycle_type(pi), sep, fix, exceedance_count(pp)}];
        });
        const auto& census = default_oracle().census(n);
        long seen = 0;
        for (auto& [key, count] : direct) {
            auto& [d, v, s, f, a] = key;
            ASSERT_EQ(census.cell(census.index_of(d), census.index_of(v), s, f, a), static_cast<std::uint64_t>(count));
            seen += count;
        }
        EXPECT_EQ(static_cast<std::uint64_t>(seen), census.total());
    }
}

TEST(Oracle, DeterministicAndChunkInvariant) {
    auto reference = take_census(6, 7, 1, 1);
    EXPECT_EQ(take_census(6, 7, 1, 1), reference);
    EXPECT_EQ(take_census(6, 7, 7, 1), reference);
    EXPECT_EQ(take_census(6, 7, 13, 4), reference);
    EXPECT_EQ(take_census(6, 7, 1000, 3), reference);
    plane_census merged(6);
    merged.tally(0, 50);
    merged.tally(50, 120);
    EXPECT_EQ(merged, reference);
}

TEST(Oracle, NthCycleSequenceMatchesEnumeration) {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t index = 0;
        for (auto it = n_cycles(n).begin(); it != n_cycles(n).end(); ++it, ++index)
            ASSERT_EQ(detail::nth_cycle_sequence(n, index), it.sequence());
    }
}

TEST(Oracle, CapRefusal) {
    oracle small(5);
    EXPECT_EQ(small.p(P("5"), 0, 1), p_ncycle(5, 0, 1));
    EXPECT_THROW(small.p(P("6"), 0, 1), cap_exceeded);
    EXPECT_THROW(small.alpha(composition({3, 3})), cap_exceeded);
    EXPECT_THROW(small.fixed_point_distribution(6), cap_exceeded);
    try {
        take_census(10, 20);
        FAIL();
    } catch (const cap_exceeded& e) {
        EXPECT_EQ(e.requested, 10);
        EXPECT_EQ(e.cap, oracle_hard_max);
    }
    EXPECT_THROW(check_oracle_cap(8, oracle_default_cap), cap_exceeded);
    EXPECT_NO_THROW(check_oracle_cap(7, oracle_default_cap));
    EXPECT_THROW(check_oracle_cap(0, oracle_default_cap), domain_error);
}

TEST(Oracle, AlphaExamples) {
    EXPECT_EQ(oracle_alpha(parse_composition("1,3")), 12);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(oracle_alpha(composition({n})), factorial(n - 1) * factorial(n - 1));
        EXPECT_EQ(oracle_alpha(composition(std::vector<int>(static_cast<std::size_t>(n), 1))), factorial(n - 1));
    }
}

TEST(Oracle, FixedPointDistribution) {
    EXPECT_EQ(oracle_fixed_point_distribution(3), (std::map<int, BigInt>{{0, 2}, {3, 2}}));
    EXPECT_EQ(oracle_fixed_point_distribution(2), (std::map<int, BigInt>{{2, 1}}));
    for (int n = 2; n <= 7; ++n) {
        BigInt total = 0, weighted = 0;
        for (auto& [i, c] : oracle_fixed_point_distribution(n)) {
            total += c;
            weighted += i * c;
        }
        EXPECT_EQ(total, factorial(n - 1) * factorial(n - 1));
        EXPECT_EQ(make_rational(weighted, total), make_rational(n, n - 1));
    }
}

TEST(Oracle, EvaluateQueries) {
    oracle_query q;
    q.n = 4;
    q.m = 2;
    q.diagonal_type = P("4");
    q.vertical_cycles = 2;
    EXPECT_EQ(default_oracle().evaluate(q), 16);
    q.mode = oracle_mode::isolated;
    q.m = 1;
    EXPECT_EQ(default_oracle().evaluate(q), 6);

    oracle_query strat;
    strat.n = 3;
    strat.diagonal_type = P("3");
    strat.vertical_cycles = 3;
    strat.exceedances = 0;
    EXPECT_EQ(default_oracle().evaluate(strat), 2);
    strat.exceedances = 1;
    EXPECT_EQ(default_oracle().evaluate(strat), 0);

    oracle_query by_type;
    by_type.n = 4;
    by_type.diagonal_type = P("4");
    by_type.vertical_type = P("1+1+1+1");
    EXPECT_EQ(default_oracle().evaluate(by_type), 6);

    oracle_query alpha;
    alpha.mode = oracle_mode::alpha;
    alpha.alpha = parse_composition("1,3");
    EXPECT_EQ(default_oracle().evaluate(alpha), 12);
    alpha.alpha.reset();
    EXPECT_THROW(default_oracle().evaluate(alpha), domain_error);

    oracle_query fp;
    fp.mode = oracle_mode::fixed_point_distribution;
    fp.n = 3;
    fp.fixed_points = 3;
    EXPECT_EQ(default_oracle().evaluate(fp), 2);

    oracle_query unfiltered;
    unfiltered.n = 5;
    EXPECT_EQ(default_oracle().evaluate(unfiltered), factorial(4) * factorial(5));
    unfiltered.m = 6;
    EXPECT_THROW(default_oracle().evaluate(unfiltered), domain_error);
}

TEST(Oracle, SizeMismatchInQueries) {
    const auto& census = default_oracle().census(4);
    EXPECT_THROW(census.index_of(P("3+2")), size_mismatch);
}
