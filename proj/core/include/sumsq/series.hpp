#pragma once

// Truncated formal power series in q with exact integer coefficients.
//
// An IntSeries of order N stands for a series known modulo q^(N+1). Every
// binary operation returns a result whose order is the minimum of its
// operands' orders; constructors take the order explicitly.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace sumsq::series {

using BigInt = boost::multiprecision::mpz_int;

class IntSeries {
public:
    // Zero series known to the given order.
    explicit IntSeries(std::size_t order);
    // coeffs.size() must be order + 1; throws std::invalid_argument otherwise.
    IntSeries(std::size_t order, std::vector<BigInt> coeffs);

    static IntSeries zero(std::size_t order) { return IntSeries(order); }
    static IntSeries one(std::size_t order);
    // c * q^k (zero if k > order).
    static IntSeries monomial(std::size_t order, std::size_t k, const BigInt& c = 1);
    // Builds from small coefficients; missing trailing coefficients are zero,
    // extra ones beyond order are dropped.
    static IntSeries from_ints(std::size_t order, std::span<const std::int64_t> coeffs);
    static IntSeries from_ints(std::size_t order, std::initializer_list<std::int64_t> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t k) const { return coeffs_.at(k); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    // Same series viewed at a lower order. new_order must not exceed order().
    IntSeries truncated(std::size_t new_order) const;

    IntSeries operator-() const;
    IntSeries& operator+=(const IntSeries& rhs);
    IntSeries& operator-=(const IntSeries& rhs);
    IntSeries& operator*=(const BigInt& scalar);

    // Multiplies in place by (1 + sign*q^m); sign is +1 or -1. O(order).
    void mul_binomial(std::size_t m, int sign);
    // Divides in place by (1 + sign*q^m), m >= 1. O(order).
    void div_binomial(std::size_t m, int sign);

    std::string to_string(std::size_t max_terms = 12) const;

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
// Schoolbook Cauchy product truncated to min(a.order(), b.order()).
IntSeries mul(const IntSeries& a, const IntSeries& b);
// Requires a[0] == +-1; throws std::domain_error("not invertible over integers").
IntSeries invert(const IntSeries& a);
// a^e by repeated squaring; negative e goes through invert.
IntSeries pow(const IntSeries& a, std::int64_t e);

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return sub(a, b); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }

// (q^a; q^b)_inf^e modulo q^(order+1). Requires a, b >= 1.
IntSeries pochhammer(std::int64_t a, std::int64_t b, std::int64_t e, std::size_t order);
// (-q^a; q^b)_inf^e modulo q^(order+1). Requires a, b >= 1.
IntSeries neg_pochhammer(std::int64_t a, std::int64_t b, std::int64_t e, std::size_t order);
// sum_{m in Z} (-1)^m q^(m^2).
IntSeries theta_signed(std::size_t order);

struct Mismatch {
    std::size_t exponent;
    BigInt lhs;
    BigInt rhs;
};

struct Comparison {
    bool equal = true;
    std::optional<Mismatch> first_mismatch;

    explicit operator bool() const noexcept { return equal; }
};

// Compares coefficients 0..order. Throws std::out_of_range if order exceeds
// either operand's order.
Comparison equal_to_order(const IntSeries& a, const IntSeries& b, std::size_t order);

} // namespace sumsq::series
