#pragma once

// Slow reference implementations. Nothing here calls into the library, so a
// bug there cannot hide behind a matching bug here.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

namespace oracle {

inline std::int64_t root_floor(std::int64_t n)
{
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

// Ordered signed representations as a sum of s squares, s in 1..4.
inline std::int64_t r_squares(int s, std::int64_t n)
{
    const std::int64_t m = root_floor(n);
    std::int64_t count = 0;
    if (s == 1) {
        for (std::int64_t x = -m; x <= m; ++x) {
            count += (x * x == n);
        }
    } else if (s == 2) {
        for (std::int64_t x = -m; x <= m; ++x) {
            for (std::int64_t y = -m; y <= m; ++y) {
                count += (x * x + y * y == n);
            }
        }
    } else if (s == 3) {
        for (std::int64_t x = -m; x <= m; ++x) {
            for (std::int64_t y = -m; y <= m; ++y) {
                const std::int64_t rest = n - x * x - y * y;
                if (rest < 0) {
                    continue;
                }
                const std::int64_t z = root_floor(rest);
                if (z * z == rest) {
                    count += (z == 0) ? 1 : 2;
                }
            }
        }
    } else {
        for (std::int64_t w = -m; w <= m; ++w) {
            count += r_squares(3, n - w * w) * (n - w * w >= 0);
        }
    }
    return count;
}

inline std::int64_t n3_primitive(std::int64_t n)
{
    const std::int64_t m = root_floor(n);
    std::int64_t count = 0;
    for (std::int64_t x = -m; x <= m; ++x) {
        for (std::int64_t y = -m; y <= m; ++y) {
            for (std::int64_t z = -m; z <= m; ++z) {
                if (x * x + y * y + z * z == n && std::gcd(std::gcd(x, y), z) == 1) {
                    ++count;
                }
            }
        }
    }
    return count;
}

inline std::int64_t r_triangular3(std::int64_t n)
{
    std::vector<std::int64_t> tri;
    for (std::int64_t k = 0; k * (k + 1) / 2 <= n; ++k) {
        tri.push_back(k * (k + 1) / 2);
    }
    std::int64_t count = 0;
    for (auto a : tri) {
        for (auto b : tri) {
            for (auto c : tri) {
                count += (a + b + c == n);
            }
        }
    }
    return count;
}

// (r, s, t) with all entries >= 1 and rs + rt + st = n, any order.
inline std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> ordered_triples(std::int64_t n)
{
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    for (std::int64_t r = 1; r <= n; ++r) {
        for (std::int64_t s = 1; r * s <= n; ++s) {
            for (std::int64_t t = 1; r * s + r * t + s * t <= n; ++t) {
                if (r * s + r * t + s * t == n) {
                    out.emplace_back(r, s, t);
                }
            }
        }
    }
    return out;
}

struct Form {
    std::int64_t a, b, c;
    friend auto operator<=>(const Form&, const Form&) = default;
};

// Every reduced form of discriminant D by scanning a and c up to |D| and
// solving for b. Quadratic in |D|; fine for |D| in the hundreds.
inline std::vector<Form> reduced_forms(std::int64_t D)
{
    std::vector<Form> out;
    const std::int64_t m = -D;
    for (std::int64_t a = 1; a <= m; ++a) {
        for (std::int64_t c = a; 4 * a * c <= m + a * a; ++c) {
            const std::int64_t b2 = D + 4 * a * c;
            if (b2 < 0) {
                continue;
            }
            const std::int64_t b = root_floor(b2);
            if (b * b != b2 || b > a) {
                continue;
            }
            out.push_back({a, b, c});
            if (b != 0 && b != a && a != c) {
                out.push_back({a, -b, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_prime(std::int64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

// Legendre symbol by listing the quadratic residues mod p.
inline int legendre(std::int64_t a, std::int64_t p)
{
    const std::int64_t r = ((a % p) + p) % p;
    if (r == 0) {
        return 0;
    }
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == r) {
            return 1;
        }
    }
    return -1;
}

// Kronecker symbol (a/n), n >= 1, from the prime factorization of n.
inline int kronecker(std::int64_t a, std::int64_t n)
{
    int result = 1;
    for (std::int64_t p = 2; n > 1; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        while (n % p == 0) {
            n /= p;
            if (p == 2) {
                const std::int64_t r = ((a % 8) + 8) % 8;
                result *= (a % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
            } else {
                result *= legendre(a, p);
            }
        }
    }
    return result;
}

} // namespace oracle
