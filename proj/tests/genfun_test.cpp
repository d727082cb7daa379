#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sumsq/counts.hpp"
#include "sumsq/errors.hpp"
#include "sumsq/genfun.hpp"

using namespace sumsq;
using namespace sumsq::genfun;
using series::IntSeries;

namespace {

void expect_prefix(const IntSeries& s, std::initializer_list<std::int64_t> c)
{
    std::size_t k = 0;
    for (auto v : c) {
        EXPECT_EQ(s[k], v) << "q^" << k;
        ++k;
    }
}

} // namespace

TEST(Genfun, SeriesR)
{
    expect_prefix(series_R(3, 10), {1, -6, 12, -8});
    EXPECT_EQ(series_R(2, 5)[1], -4);
    EXPECT_EQ(series_R(4, 5)[0], 1);
    EXPECT_THROW(series_R(5, 5), DomainError);
}

TEST(Genfun, Triangular3)
{
    expect_prefix(series_triangular3(10), {1, 3, 3, 4});
    const auto t = series_triangular3(1000);
    for (std::size_t n = 0; n <= 1000; ++n) {
        EXPECT_GE(t[n], 1) << n;
    }
    for (std::size_t n = 0; n <= 60; ++n) {
        EXPECT_EQ(t[n], oracle::r_triangular3(n)) << n;
    }
}

TEST(Genfun, AndrewsRhs)
{
    expect_prefix(series_andrews_rhs(10), {1, -6, 12});
    EXPECT_TRUE(equal_to_order(series_andrews_rhs(500), series_R(3, 500), 500));
}

TEST(Genfun, GaussGenRhs)
{
    expect_prefix(series_gauss_gen_rhs(10), {1, -6});
    EXPECT_TRUE(equal_to_order(series_gauss_gen_rhs(500), series_R(3, 500), 500));
}

TEST(Genfun, EyphkaRhs)
{
    expect_prefix(series_eyphka_rhs(10), {1, 3, 3});
    EXPECT_TRUE(equal_to_order(series_eyphka_rhs(500), series_triangular3(500), 500));
}

TEST(Genfun, EyphkaNegativeBranchStartsAtThree)
{
    // Build everything except the negative triple branch by hand; the
    // remainder must be that branch, whose lowest term is q^3 (r=s=t=-1).
    constexpr std::int64_t N = 40;
    std::vector<std::int64_t> pos(N + 1, 0), neg(N + 1, 0);
    pos[0] = 1;
    for (std::int64_t r = 1; r <= N; ++r) {
        pos[r] += 3;
    }
    for (std::int64_t r = 1; r <= N; ++r) {
        for (std::int64_t s = 1; 2 * r * s + r + s <= N; ++s) {
            pos[2 * r * s + r + s] += 3;
            for (std::int64_t t = 1; 2 * (r * s + r * t + s * t) + r + s + t <= N; ++t) {
                pos[2 * (r * s + r * t + s * t) + r + s + t] += 1;
            }
        }
    }
    for (std::int64_t r = 1; r <= N; ++r) {
        for (std::int64_t s = 1; s <= N; ++s) {
            for (std::int64_t t = 1; t <= N; ++t) {
                const std::int64_t e = 2 * (r * s + r * t + s * t) - r - s - t;
                if (e <= N) {
                    neg[e] += 1;
                }
            }
        }
    }
    const auto full = series_eyphka_rhs(N);
    for (std::int64_t n = 0; n <= N; ++n) {
        EXPECT_EQ(full[n], pos[n] + neg[n]) << n;
    }
    EXPECT_EQ(neg[0] + neg[1] + neg[2], 0);
    EXPECT_EQ(neg[3], 1);
}

TEST(Genfun, EtaLimitChecks)
{
    const auto results = series_eta_limit_checks(200);
    ASSERT_EQ(results.size(), 3u);
    for (const auto& r : results) {
        EXPECT_TRUE(r.passed) << r.label;
        EXPECT_FALSE(r.first_mismatch);
    }
    EXPECT_EQ(series_R(3, 0)[0], 1);
    EXPECT_EQ(series_triangular3(0)[0], 1);
}

TEST(Genfun, HarnessReportsInjectedMismatch)
{
    const auto r = check_series_identity(IdentityId::eta_limits, "injected", IntSeries::one(0),
                                         IntSeries::from_ints(0, {2}), 0);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.first_mismatch);
    EXPECT_EQ(r.first_mismatch->exponent, 0u);
}

TEST(Genfun, PassedIffNoMismatch)
{
    for (IdentityId id : all_identity_ids()) {
        for (const auto& r : run_identity(id, 120)) {
            EXPECT_EQ(r.passed, !r.first_mismatch.has_value());
            EXPECT_TRUE(r.passed) << to_string(id) << " " << r.label;
        }
    }
}

TEST(Genfun, IdentityIdsRoundTrip)
{
    for (IdentityId id : all_identity_ids()) {
        EXPECT_EQ(parse_identity_id(to_string(id)), id);
    }
    EXPECT_FALSE(parse_identity_id("bogus"));
    EXPECT_EQ(all_identity_ids().size(), 7u);
}

TEST(Genfun, R4AndR2DivisorFormulas)
{
    const auto r4 = series_R(4, 500);
    const auto r2 = series_R(2, 500);
    for (std::int64_t n = 1; n <= 500; ++n) {
        const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
        EXPECT_EQ(r4[n], sign * 8 * counts::sigma_no4(n)) << n;
        EXPECT_EQ(r2[n], sign * 4 * (counts::divisor_count_mod4(n, 1) - counts::divisor_count_mod4(n, 3))) << n;
    }
}

TEST(Genfun, AllIdentitiesAtOrder500)
{
    for (IdentityId id : all_identity_ids()) {
        const std::size_t order = (id == IdentityId::eta_limits) ? 200 : 500;
        for (const auto& r : run_identity(id, order)) {
            EXPECT_TRUE(r.passed) << to_string(id);
            EXPECT_EQ(r.order, order);
        }
    }
}
