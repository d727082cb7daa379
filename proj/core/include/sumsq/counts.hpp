#pragma once

// Arithmetic functions counted by brute force, plus the lattice-sum
// decompositions over solutions of rs + rt + st = n.

#include <cstdint>
#include <vector>

namespace sumsq::counts {

// A solution of rs + rt + st = n with r >= s >= t >= 1.
struct Triple {
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;

    std::int64_t value() const noexcept { return r * s + r * t + s * t; }
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct DecompositionCounts {
    std::int64_t n = 0;
    std::int64_t total = 0;     // ordered (r,s,t), all r,s,t >= 1
    std::int64_t strict = 0;    // r > s > t > 0
    std::int64_t two_equal = 0; // r^2 + 2rt = n with r != t
    std::int64_t all_equal = 0; // 3r^2 = n
};

std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);

// Representations of n as an ordered sum of s squares, signs counted.
// Nested loops over |x| <= sqrt(n); s in 1..4. r_s(0) = 1.
std::int64_t r_squares(int s, std::int64_t n);
// r_s(0..limit) by enumerating squares one coordinate at a time.
std::vector<std::int64_t> r_squares_table(int s, std::int64_t limit);

// Representations n = x^2 + y^2 + z^2 with gcd(x, y, z) = 1.
std::int64_t n3_primitive(std::int64_t n);

// Ordered triples of triangular numbers 0, 1, 3, 6, ... summing to n.
std::int64_t r_triangular3(std::int64_t n);
std::vector<std::int64_t> r_triangular3_table(std::int64_t limit);

std::int64_t divisor_count(std::int64_t n);
// Number of divisors d of n with d = k (mod 4); k is 1 or 3.
std::int64_t divisor_count_mod4(std::int64_t n, int k);
// Sum of the divisors of n not divisible by 4.
std::int64_t sigma_no4(std::int64_t n);

// sum over rs = n of (-1)^(r+s).
std::int64_t signed_pair_sum(std::int64_t n);
// sum over ordered r,s,t >= 1 with rs + rt + st = n of (-1)^(r+s+t).
std::int64_t signed_triple_sum(std::int64_t n);
// 6(-1)^(n+1) signed_pair_sum(n) + 4(-1)^(n+1) signed_triple_sum(n).
std::int64_t andrews_crandall_r3(std::int64_t n);

// All solutions with r >= s >= t >= 1, sorted by (t, s, r).
std::vector<Triple> sorted_solutions(std::int64_t n);

DecompositionCounts decompose_solutions(std::int64_t n);

// (-1)^(n+1) signed_triple_sum(n) == number of ordered solutions.
// Throws DomainError unless n = 1, 2 (mod 4).
bool parity_lemma_check(std::int64_t n);

// Conjunction of the divisor/solution-count formulas for r_3(n) that apply
// to n's residue class, each compared with brute-force r_3(n).
bool proposition_checks(std::int64_t n);

} // namespace sumsq::counts
