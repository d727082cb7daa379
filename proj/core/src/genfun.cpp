#include "sumsq/genfun.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "sumsq/counts.hpp"
#include "sumsq/errors.hpp"

namespace sumsq::genfun {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 7> kIdentityNames{{
    {IdentityId::andrews516, "andrews516"},
    {IdentityId::gauss_gen, "gauss-gen"},
    {IdentityId::eyphka, "eyphka"},
    {IdentityId::jacobi4, "jacobi4"},
    {IdentityId::two_square, "two-square"},
    {IdentityId::triple_product, "triple-product"},
    {IdentityId::eta_limits, "eta-limits"},
}};

constexpr std::int64_t parity_sign(std::int64_t k) noexcept { return (k % 2 == 0) ? 1 : -1; }

IntSeries from_accumulator(std::size_t order, const std::vector<std::int64_t>& acc)
{
    return IntSeries::from_ints(order, std::span<const std::int64_t>(acc));
}

} // namespace

std::string_view to_string(IdentityId id)
{
    for (const auto& [key, name] : kIdentityNames) {
        if (key == id) {
            return name;
        }
    }
    return "unknown";
}

std::optional<IdentityId> parse_identity_id(std::string_view name)
{
    for (const auto& [key, n] : kIdentityNames) {
        if (n == name) {
            return key;
        }
    }
    return std::nullopt;
}

const std::vector<IdentityId>& all_identity_ids()
{
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& entry : kIdentityNames) {
            v.push_back(entry.first);
        }
        return v;
    }();
    return ids;
}

IdentityCheckResult check_series_identity(IdentityId id, std::string label, const IntSeries& lhs,
                                          const IntSeries& rhs, std::size_t order)
{
    IdentityCheckResult result{id, std::move(label), order, true, std::nullopt};
    series::Comparison cmp = series::equal_to_order(lhs, rhs, order);
    result.passed = cmp.equal;
    result.first_mismatch = std::move(cmp.first_mismatch);
    return result;
}

IntSeries series_R(int s, std::size_t order)
{
    if (s < 2 || s > 4) {
        throw DomainError("series_R: s must be 2, 3 or 4");
    }
    return series::pow(series::theta_signed(order), s);
}

IntSeries series_triangular3(std::size_t order)
{
    std::vector<std::int64_t> tri(order + 1, 0);
    for (std::size_t k = 0; k * (k + 1) / 2 <= order; ++k) {
        tri[k * (k + 1) / 2] = 1;
    }
    const IntSeries cube = series::pow(from_accumulator(order, tri), 3);
    const IntSeries eta = series::pochhammer(2, 2, 6, order) * series::pochhammer(1, 1, -3, order);
    const series::Comparison cmp = series::equal_to_order(cube, eta, order);
    if (!cmp.equal) {
        throw ConsistencyError("series_triangular3: theta cube and eta quotient disagree at q^" +
                               std::to_string(cmp.first_mismatch->exponent));
    }
    return cube;
}

IntSeries series_andrews_rhs(std::size_t order)
{
    const auto N = static_cast<std::int64_t>(order);
    std::vector<std::int64_t> acc(order + 1, 0);
    acc[0] = 1;
    // 4 (-1)^n q^n / (1 + q^n) = 4 (-1)^n sum_{k>=1} (-1)^(k-1) q^(nk)
    for (std::int64_t n = 1; n <= N; ++n) {
        for (std::int64_t k = 1; n * k <= N; ++k) {
            acc[static_cast<std::size_t>(n * k)] += 4 * parity_sign(n) * parity_sign(k - 1);
        }
    }
    // -2 (-1)^j q^e (1 - q^n)/(1 + q^n), e = n^2 - j^2 >= 2n - 1,
    // with (1 - q^n)/(1 + q^n) = 1 + 2 sum_{k>=1} (-1)^k q^(nk).
    for (std::int64_t n = 1; 2 * n - 1 <= N; ++n) {
        for (std::int64_t j = -(n - 1); j <= n - 1; ++j) {
            const std::int64_t e = n * n - j * j;
            if (e > N) {
                continue;
            }
            const std::int64_t w = -2 * parity_sign(j < 0 ? -j : j);
            acc[static_cast<std::size_t>(e)] += w;
            for (std::int64_t k = 1; e + n * k <= N; ++k) {
                acc[static_cast<std::size_t>(e + n * k)] += w * 2 * parity_sign(k);
            }
        }
    }
    return from_accumulator(order, acc);
}

IntSeries series_gauss_gen_rhs(std::size_t order)
{
    const auto N = static_cast<std::int64_t>(order);
    std::vector<std::int64_t> acc(order + 1, 0);
    acc[0] = 1;
    // (-q)^e carries (-1)^e; the summand carries a further (-1)^(e+...).
    for (std::int64_t r = 1; r <= N; ++r) {
        for (std::int64_t s = 1; r * s <= N; ++s) {
            const std::int64_t e = r * s;
            acc[static_cast<std::size_t>(e)] += 6 * parity_sign(e) * parity_sign(e + r + s + 1);
        }
    }
    // All ordered triples; r = s = 1 gives the smallest exponent 1 + 2t.
    for (std::int64_t t = 1; 1 + 2 * t <= N; ++t) {
        for (std::int64_t s = 1; s * t + s + t <= N; ++s) {
            for (std::int64_t r = 1;; ++r) {
                const std::int64_t e = r * s + r * t + s * t;
                if (e > N) {
                    break;
                }
                acc[static_cast<std::size_t>(e)] += 4 * parity_sign(e) * parity_sign(e + r + s + t + 1);
            }
        }
    }
    return from_accumulator(order, acc);
}

IntSeries series_eyphka_rhs(std::size_t order)
{
    const auto N = static_cast<std::int64_t>(order);
    std::vector<std::int64_t> acc(order + 1, 0);
    acc[0] = 1;
    for (std::int64_t r = 1; r <= N; ++r) {
        acc[static_cast<std::size_t>(r)] += 3;
    }
    for (std::int64_t r = 1; 3 * r + 1 <= N; ++r) {
        for (std::int64_t s = 1; 2 * r * s + r + s <= N; ++s) {
            acc[static_cast<std::size_t>(2 * r * s + r + s)] += 3;
        }
    }
    // Both exponents are increasing in each of r, s, t >= 1, so each loop
    // stops at the first exponent beyond the order. The negative branch is
    // re-indexed: r,s,t < 0 becomes 2rs+2rt+2st-r-s-t with r,s,t > 0.
    const auto pos = [](std::int64_t r, std::int64_t s, std::int64_t t) {
        return 2 * (r * s + r * t + s * t) + r + s + t;
    };
    const auto neg = [](std::int64_t r, std::int64_t s, std::int64_t t) {
        return 2 * (r * s + r * t + s * t) - r - s - t;
    };
    for (std::int64_t t = 1; neg(1, 1, t) <= N; ++t) {
        for (std::int64_t s = 1; neg(1, s, t) <= N; ++s) {
            for (std::int64_t r = 1; neg(r, s, t) <= N; ++r) {
                acc[static_cast<std::size_t>(neg(r, s, t))] += 1;
                if (pos(r, s, t) <= N) {
                    acc[static_cast<std::size_t>(pos(r, s, t))] += 1;
                }
            }
        }
    }
    return from_accumulator(order, acc);
}

std::vector<IdentityCheckResult> series_eta_limit_checks(std::size_t order)
{
    using series::neg_pochhammer;
    using series::pochhammer;
    const IntSeries r3 = series_R(3, order);
    std::vector<IdentityCheckResult> out;

    // (q^2;q^2)^3 / (-q;q)^6 = R_3(q)
    const IntSeries theta_limit = pochhammer(2, 2, 3, order) * neg_pochhammer(1, 1, -6, order);
    out.push_back(check_series_identity(IdentityId::eta_limits, "(q2;q2)^3/(-q;q)^6 = R3", theta_limit, r3,
                                        order));

    // (q^2;q^2)^2 (q;q)^2 / ((-q;q)^4 (q^2;q^2)) = R_3(q)
    const IntSeries appell_limit =
        pochhammer(2, 2, 1, order) * pochhammer(1, 1, 2, order) * neg_pochhammer(1, 1, -4, order);
    out.push_back(check_series_identity(IdentityId::eta_limits, "(q2;q2)^2(q;q)^2/((-q;q)^4(q2;q2)) = R3",
                                        appell_limit, r3, order));

    // (q^2;q^2)^6 / (q;q)^3 = sum r_3Delta(n) q^n
    const IntSeries tri_limit = pochhammer(2, 2, 6, order) * pochhammer(1, 1, -3, order);
    out.push_back(check_series_identity(IdentityId::eta_limits, "(q2;q2)^6/(q;q)^3 = triangular3", tri_limit,
                                        series_triangular3(order), order));
    return out;
}

std::vector<IdentityCheckResult> run_identity(IdentityId id, std::size_t order)
{
    switch (id) {
    case IdentityId::andrews516:
        return {check_series_identity(id, "Andrews RHS = R3", series_andrews_rhs(order), series_R(3, order),
                                      order)};
    case IdentityId::gauss_gen:
        return {check_series_identity(id, "lattice-sum RHS = R3", series_gauss_gen_rhs(order),
                                      series_R(3, order), order)};
    case IdentityId::eyphka:
        return {check_series_identity(id, "EYPHKA RHS = triangular3", series_eyphka_rhs(order),
                                      series_triangular3(order), order)};
    case IdentityId::jacobi4: {
        std::vector<std::int64_t> acc(order + 1, 0);
        acc[0] = 1;
        for (std::size_t n = 1; n <= order; ++n) {
            acc[n] = parity_sign(static_cast<std::int64_t>(n)) * 8 *
                     counts::sigma_no4(static_cast<std::int64_t>(n));
        }
        return {check_series_identity(id, "R4 = 1 + sum (-1)^n 8 sigma_no4(n) q^n", series_R(4, order),
                                      from_accumulator(order, acc), order)};
    }
    case IdentityId::two_square: {
        std::vector<std::int64_t> acc(order + 1, 0);
        acc[0] = 1;
        for (std::size_t n = 1; n <= order; ++n) {
            const auto m = static_cast<std::int64_t>(n);
            acc[n] = parity_sign(m) * 4 *
                     (counts::divisor_count_mod4(m, 1) - counts::divisor_count_mod4(m, 3));
        }
        return {check_series_identity(id, "R2 = 1 + sum (-1)^n 4(d1-d3)(n) q^n", series_R(2, order),
                                      from_accumulator(order, acc), order)};
    }
    case IdentityId::triple_product:
        return {check_series_identity(id, "theta = (q;q)/(-q;q)", series::theta_signed(order),
                                      series::pochhammer(1, 1, 1, order) *
                                          series::neg_pochhammer(1, 1, -1, order),
                                      order)};
    case IdentityId::eta_limits:
        return series_eta_limit_checks(order);
    }
    throw std::invalid_argument("run_identity: unknown identity");
}

} // namespace sumsq::genfun
