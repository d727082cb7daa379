#include "sumsq/counts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sumsq/errors.hpp"

namespace sumsq::counts {

namespace {

void require_positive(std::int64_t n, const char* what)
{
    if (n < 1) {
        throw DomainError(std::string(what) + ": n must be positive, got " + std::to_string(n));
    }
}

void require_nonnegative(std::int64_t n, const char* what)
{
    if (n < 0) {
        throw DomainError(std::string(what) + ": n must be non-negative, got " + std::to_string(n));
    }
}

constexpr std::int64_t sign_of_parity(std::int64_t k) noexcept { return (k % 2 == 0) ? 1 : -1; }

bool is_triangular(std::int64_t m) { return m >= 0 && is_square(8 * m + 1); }

// Sparse convolution of `acc` with the indicator/weights of `support`.
std::vector<std::int64_t> convolve_sparse(const std::vector<std::int64_t>& acc,
                                          const std::vector<std::pair<std::int64_t, std::int64_t>>& support,
                                          std::int64_t limit)
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(limit + 1), 0);
    for (std::int64_t k = 0; k <= limit; ++k) {
        const std::int64_t a = acc[static_cast<std::size_t>(k)];
        if (a == 0) {
            continue;
        }
        for (const auto& [e, w] : support) {
            if (k + e > limit) {
                break;
            }
            out[static_cast<std::size_t>(k + e)] += a * w;
        }
    }
    return out;
}

std::int64_t r_squares_rec(int s, std::int64_t n)
{
    if (s == 1) {
        if (!is_square(n)) {
            return 0;
        }
        return n == 0 ? 1 : 2;
    }
    // x and -x contribute alike.
    std::int64_t total = r_squares_rec(s - 1, n);
    const std::int64_t bound = isqrt(n);
    for (std::int64_t x = 1; x <= bound; ++x) {
        total += 2 * r_squares_rec(s - 1, n - x * x);
    }
    return total;
}

} // namespace

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0) {
        throw DomainError("isqrt: negative argument");
    }
    if (n < 2) {
        return n;
    }
    // Compare through division so r*r never overflows near INT64_MAX.
    auto r = std::min<std::int64_t>(static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))), 3037000499);
    while (r > n / r) {
        --r;
    }
    while (r + 1 <= n / (r + 1)) {
        ++r;
    }
    return r;
}

bool is_square(std::int64_t n)
{
    if (n < 0) {
        return false;
    }
    const std::int64_t r = isqrt(n);
    return r * r == n;
}

std::int64_t r_squares(int s, std::int64_t n)
{
    if (s < 1 || s > 4) {
        throw DomainError("r_squares: s must be in 1..4, got " + std::to_string(s));
    }
    require_nonnegative(n, "r_squares");
    return r_squares_rec(s, n);
}

std::vector<std::int64_t> r_squares_table(int s, std::int64_t limit)
{
    if (s < 1 || s > 4) {
        throw DomainError("r_squares_table: s must be in 1..4, got " + std::to_string(s));
    }
    require_nonnegative(limit, "r_squares_table");
    std::vector<std::pair<std::int64_t, std::int64_t>> squares{{0, 1}};
    for (std::int64_t x = 1; x * x <= limit; ++x) {
        squares.emplace_back(x * x, 2);
    }
    std::vector<std::int64_t> acc(static_cast<std::size_t>(limit + 1), 0);
    acc[0] = 1;
    for (int i = 0; i < s; ++i) {
        acc = convolve_sparse(acc, squares, limit);
    }
    return acc;
}

std::int64_t n3_primitive(std::int64_t n)
{
    require_positive(n, "n3_primitive");
    std::int64_t count = 0;
    const std::int64_t bound = isqrt(n);
    for (std::int64_t x = -bound; x <= bound; ++x) {
        for (std::int64_t y = -bound; y <= bound; ++y) {
            const std::int64_t rest = n - x * x - y * y;
            if (rest < 0 || !is_square(rest)) {
                continue;
            }
            const std::int64_t z = isqrt(rest);
            if (std::gcd(std::gcd(x, y), z) == 1) {
                count += (z == 0) ? 1 : 2;
            }
        }
    }
    return count;
}

std::int64_t r_triangular3(std::int64_t n)
{
    require_nonnegative(n, "r_triangular3");
    std::int64_t count = 0;
    for (std::int64_t i = 0; i * (i + 1) / 2 <= n; ++i) {
        const std::int64_t a = i * (i + 1) / 2;
        for (std::int64_t j = 0; a + j * (j + 1) / 2 <= n; ++j) {
            if (is_triangular(n - a - j * (j + 1) / 2)) {
                ++count;
            }
        }
    }
    return count;
}

std::vector<std::int64_t> r_triangular3_table(std::int64_t limit)
{
    require_nonnegative(limit, "r_triangular3_table");
    std::vector<std::pair<std::int64_t, std::int64_t>> tri;
    for (std::int64_t i = 0; i * (i + 1) / 2 <= limit; ++i) {
        tri.emplace_back(i * (i + 1) / 2, 1);
    }
    std::vector<std::int64_t> acc(static_cast<std::size_t>(limit + 1), 0);
    acc[0] = 1;
    for (int i = 0; i < 3; ++i) {
        acc = convolve_sparse(acc, tri, limit);
    }
    return acc;
}

std::int64_t divisor_count(std::int64_t n)
{
    require_positive(n, "divisor_count");
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            count += (d * d == n) ? 1 : 2;
        }
    }
    return count;
}

std::int64_t divisor_count_mod4(std::int64_t n, int k)
{
    require_positive(n, "divisor_count_mod4");
    if (k != 1 && k != 3) {
        throw DomainError("divisor_count_mod4: k must be 1 or 3");
    }
    std::int64_t count = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0 && d % 4 == k) {
            ++count;
        }
    }
    return count;
}

std::int64_t sigma_no4(std::int64_t n)
{
    require_positive(n, "sigma_no4");
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0 && d % 4 != 0) {
            sum += d;
        }
    }
    return sum;
}

std::int64_t signed_pair_sum(std::int64_t n)
{
    require_positive(n, "signed_pair_sum");
    std::int64_t sum = 0;
    for (std::int64_t r = 1; r <= n; ++r) {
        if (n % r == 0) {
            sum += sign_of_parity(r + n / r);
        }
    }
    return sum;
}

std::vector<Triple> sorted_solutions(std::int64_t n)
{
    require_positive(n, "sorted_solutions");
    std::vector<Triple> out;
    // r >= s >= t gives n >= 3t^2 and n >= s^2 + 2st.
    for (std::int64_t t = 1; 3 * t * t <= n; ++t) {
        for (std::int64_t s = t; s * s + 2 * s * t <= n; ++s) {
            const std::int64_t num = n - s * t;
            const std::int64_t den = s + t;
            if (num % den != 0) {
                continue;
            }
            const std::int64_t r = num / den;
            if (r >= s) {
                out.push_back(Triple{r, s, t});
            }
        }
    }
    return out;
}

namespace {

std::int64_t permutation_count(const Triple& x) noexcept
{
    if (x.r == x.s && x.s == x.t) {
        return 1;
    }
    if (x.r == x.s || x.s == x.t) {
        return 3;
    }
    return 6;
}

} // namespace

std::int64_t signed_triple_sum(std::int64_t n)
{
    std::int64_t sum = 0;
    for (const Triple& x : sorted_solutions(n)) {
        sum += permutation_count(x) * sign_of_parity(x.r + x.s + x.t);
    }
    return sum;
}

std::int64_t andrews_crandall_r3(std::int64_t n)
{
    require_positive(n, "andrews_crandall_r3");
    const std::int64_t sign = sign_of_parity(n + 1);
    return 6 * sign * signed_pair_sum(n) + 4 * sign * signed_triple_sum(n);
}

DecompositionCounts decompose_solutions(std::int64_t n)
{
    require_positive(n, "decompose_solutions");
    DecompositionCounts dc;
    dc.n = n;
    // Ordered solutions by direct enumeration over r and s.
    for (std::int64_t r = 1; r < n; ++r) {
        for (std::int64_t s = 1; r * s < n; ++s) {
            const std::int64_t num = n - r * s;
            if (num % (r + s) == 0) {
                const std::int64_t t = num / (r + s);
                ++dc.total;
                if (r > s && s > t) {
                    ++dc.strict;
                }
            }
        }
    }
    for (std::int64_t r = 1; r * r < n; ++r) {
        const std::int64_t rest = n - r * r;
        if (rest % (2 * r) == 0) {
            const std::int64_t t = rest / (2 * r);
            if (t >= 1 && t != r) {
                ++dc.two_equal;
            }
        }
    }
    if (n % 3 == 0 && is_square(n / 3)) {
        dc.all_equal = 1;
    }
    if (dc.total != 6 * dc.strict + 3 * dc.two_equal + dc.all_equal) {
        throw ConsistencyError("decompose_solutions: decomposition identity failed at n=" + std::to_string(n));
    }
    return dc;
}

bool parity_lemma_check(std::int64_t n)
{
    require_positive(n, "parity_lemma_check");
    if (n % 4 != 1 && n % 4 != 2) {
        throw DomainError("lemma hypothesis violated: n=" + std::to_string(n) + " is not 1 or 2 mod 4");
    }
    std::int64_t unsigned_count = 0;
    for (const Triple& x : sorted_solutions(n)) {
        unsigned_count += permutation_count(x);
    }
    return sign_of_parity(n + 1) * signed_triple_sum(n) == unsigned_count;
}

bool proposition_checks(std::int64_t n)
{
    require_positive(n, "proposition_checks");
    const std::int64_t r3 = r_squares(3, n);
    bool ok = true;
    if (n % 4 == 1) {
        const DecompositionCounts dc = decompose_solutions(n);
        ok = ok && (r3 == 6 * divisor_count(n) + 24 * dc.strict + 12 * dc.two_equal);
    }
    if (n % 4 == 2) {
        const DecompositionCounts dc = decompose_solutions(n);
        ok = ok && (r3 == 12 * divisor_count(n / 2) + 24 * dc.strict);
    }
    if (n % 2 == 1) {
        ok = ok && (r3 == 6 * divisor_count(n) + 4 * signed_triple_sum(n));
    } else {
        std::int64_t k = 0;
        std::int64_t odd = n;
        while (odd % 2 == 0) {
            odd /= 2;
            ++k;
        }
        ok = ok && (r3 == 6 * (3 - k) * divisor_count(odd) - 4 * signed_triple_sum(n));
    }
    return ok;
}

} // namespace sumsq::counts
