#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sumsq/counts.hpp"
#include "sumsq/errors.hpp"

using namespace sumsq;
using namespace sumsq::counts;

TEST(Counts, RSquaresExamples)
{
    EXPECT_EQ(r_squares(3, 1), 6);
    EXPECT_EQ(r_squares(3, 7), 0);
    EXPECT_EQ(r_squares(3, 11), 24);
    EXPECT_EQ(r_squares(3, 0), 1);
    EXPECT_EQ(r_squares(1, 0), 1);
    EXPECT_THROW(r_squares(5, 3), DomainError);
    EXPECT_THROW(r_squares(3, -1), DomainError);
}

TEST(Counts, RSquaresMatchOracle)
{
    for (int s = 1; s <= 4; ++s) {
        const auto table = r_squares_table(s, 300);
        for (std::int64_t n = 0; n <= 300; ++n) {
            const auto expected = oracle::r_squares(s, n);
            EXPECT_EQ(r_squares(s, n), expected) << "s=" << s << " n=" << n;
            EXPECT_EQ(table[static_cast<std::size_t>(n)], expected) << "s=" << s << " n=" << n;
        }
    }
}

TEST(Counts, N3Primitive)
{
    EXPECT_EQ(n3_primitive(1), 6);
    EXPECT_EQ(n3_primitive(4), 0);
    EXPECT_EQ(n3_primitive(3), 8);
    EXPECT_THROW(n3_primitive(0), DomainError);
    for (std::int64_t n = 1; n <= 150; ++n) {
        EXPECT_EQ(n3_primitive(n), oracle::n3_primitive(n)) << n;
    }
}

TEST(Counts, Triangular)
{
    EXPECT_EQ(r_triangular3(0), 1);
    EXPECT_EQ(r_triangular3(3), 4);
    const auto table = r_triangular3_table(200);
    for (std::int64_t n = 0; n <= 200; ++n) {
        EXPECT_EQ(r_triangular3(n), oracle::r_triangular3(n)) << n;
        EXPECT_EQ(table[static_cast<std::size_t>(n)], oracle::r_triangular3(n)) << n;
    }
}

TEST(Counts, EveryNumberIsThreeTriangulars)
{
    const auto table = r_triangular3_table(100000);
    EXPECT_TRUE(std::all_of(table.begin(), table.end(), [](std::int64_t v) { return v >= 1; }));
}

TEST(Counts, Divisors)
{
    EXPECT_EQ(divisor_count_mod4(5, 1), 2);
    EXPECT_EQ(divisor_count_mod4(3, 3), 1);
    EXPECT_EQ(r_squares(2, 5), 4 * (divisor_count_mod4(5, 1) - divisor_count_mod4(5, 3)));
    EXPECT_EQ(sigma_no4(1), 1);
    EXPECT_EQ(8 * sigma_no4(1), r_squares(4, 1));
    EXPECT_EQ(sigma_no4(4), 3);
    EXPECT_EQ(sigma_no4(2), 3);
    EXPECT_EQ(divisor_count(12), 6);
    EXPECT_THROW(divisor_count_mod4(5, 2), DomainError);
    EXPECT_THROW(sigma_no4(0), DomainError);
}

TEST(Counts, SignedPairSum)
{
    EXPECT_EQ(signed_pair_sum(1), 1);
    EXPECT_EQ(signed_pair_sum(3), 2);
    EXPECT_EQ(signed_pair_sum(2), -2);
}

TEST(Counts, SignedTripleSum)
{
    EXPECT_EQ(signed_triple_sum(3), -1);
    EXPECT_EQ(signed_triple_sum(1), 0);
    EXPECT_EQ(6 * signed_pair_sum(11) + 4 * signed_triple_sum(11), 24);
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::int64_t expected = 0;
        for (const auto& [r, s, t] : oracle::ordered_triples(n)) {
            expected += ((r + s + t) % 2 == 0) ? 1 : -1;
        }
        EXPECT_EQ(signed_triple_sum(n), expected) << n;
    }
}

TEST(Counts, AndrewsCrandall)
{
    EXPECT_EQ(andrews_crandall_r3(1), 6);
    EXPECT_EQ(andrews_crandall_r3(3), 8);
    EXPECT_EQ(andrews_crandall_r3(2), 12);
    for (std::int64_t n = 1; n <= 400; ++n) {
        EXPECT_EQ(andrews_crandall_r3(n), oracle::r_squares(3, n)) << n;
    }
}

TEST(Counts, SortedSolutionsAreExactlyTheSortedTriples)
{
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> expected;
        for (const auto& [r, s, t] : oracle::ordered_triples(n)) {
            if (r >= s && s >= t) {
                expected.emplace_back(r, s, t);
            }
        }
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> got;
        for (const auto& tr : sorted_solutions(n)) {
            EXPECT_EQ(tr.value(), n);
            got.emplace_back(tr.r, tr.s, tr.t);
        }
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected) << n;
    }
}

TEST(Counts, Decomposition)
{
    const auto d3 = decompose_solutions(3);
    EXPECT_EQ(d3.total, 1);
    EXPECT_EQ(d3.strict, 0);
    EXPECT_EQ(d3.two_equal, 0);
    EXPECT_EQ(d3.all_equal, 1);

    const auto d11 = decompose_solutions(11);
    EXPECT_EQ(d11.total, 9);
    EXPECT_EQ(d11.strict, 1);
    EXPECT_EQ(d11.two_equal, 1);
    EXPECT_EQ(d11.all_equal, 0);

    const auto d1 = decompose_solutions(1);
    EXPECT_EQ(d1.total, 0);
    EXPECT_EQ(d1.strict + d1.two_equal + d1.all_equal, 0);
}

TEST(Counts, DecompositionMatchesOracle)
{
    for (std::int64_t n = 1; n <= 150; ++n) {
        const auto triples = oracle::ordered_triples(n);
        std::int64_t strict = 0, two_equal = 0, all_equal = 0;
        for (const auto& [r, s, t] : triples) {
            strict += (r > s && s > t);
        }
        for (std::int64_t r = 1; r * r <= n; ++r) {
            for (std::int64_t t = 1; r * r + 2 * r * t <= n; ++t) {
                two_equal += (r * r + 2 * r * t == n && r != t);
            }
            all_equal += (3 * r * r == n);
        }
        const auto d = decompose_solutions(n);
        EXPECT_EQ(d.total, static_cast<std::int64_t>(triples.size())) << n;
        EXPECT_EQ(d.strict, strict) << n;
        EXPECT_EQ(d.two_equal, two_equal) << n;
        EXPECT_EQ(d.all_equal, all_equal) << n;
    }
}

TEST(Counts, ParityLemma)
{
    EXPECT_TRUE(parity_lemma_check(5));
    EXPECT_TRUE(parity_lemma_check(2));
    EXPECT_TRUE(parity_lemma_check(6));
    try {
        parity_lemma_check(3);
        FAIL() << "expected a throw";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("lemma hypothesis violated"), std::string::npos);
    }
    EXPECT_THROW(parity_lemma_check(4), DomainError);
}

TEST(Counts, Propositions)
{
    EXPECT_EQ(6 * 2 + 24 * 0 + 12 * 1, r_squares(3, 5));
    EXPECT_EQ(decompose_solutions(5).two_equal, 1);
    EXPECT_TRUE(proposition_checks(5));
    EXPECT_TRUE(proposition_checks(2));
    EXPECT_EQ(6 * 3 + 4 * signed_triple_sum(9), 30);
    EXPECT_TRUE(proposition_checks(9));
}

TEST(CountsProperty, Sweeps)
{
    for (std::int64_t n = 1; n <= 5000; ++n) {
        const auto r3 = r_squares(3, n);
        ASSERT_EQ(andrews_crandall_r3(n), r3) << n;
        ASSERT_EQ(8 * sigma_no4(n), r_squares(4, n)) << n;
        ASSERT_EQ(4 * (divisor_count_mod4(n, 1) - divisor_count_mod4(n, 3)), r_squares(2, n)) << n;
        ASSERT_NO_THROW(decompose_solutions(n)) << n;
        if (n % 4 == 1 || n % 4 == 2) {
            ASSERT_TRUE(parity_lemma_check(n)) << n;
        }
        if (n <= 2000) {
            ASSERT_TRUE(proposition_checks(n)) << n;
        }
        if (n <= 1000) {
            ASSERT_EQ(r_squares(3, 4 * n), r3) << n;
        }
    }
}

TEST(CountsProperty, RandomLargeNMatchBruteForce)
{
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::int64_t> pick(5001, 40000);
    for (int i = 0; i < 25; ++i) {
        const std::int64_t n = pick(rng);
        EXPECT_EQ(andrews_crandall_r3(n), oracle::r_squares(3, n)) << n;
    }
}

TEST(Counts, IsqrtEdges)
{
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(15), 3);
    EXPECT_EQ(isqrt(16), 4);
    EXPECT_EQ(isqrt(std::int64_t(3037000499) * 3037000499), 3037000499);
    EXPECT_TRUE(is_square(144));
    EXPECT_FALSE(is_square(145));
    EXPECT_THROW(isqrt(-1), DomainError);
}
