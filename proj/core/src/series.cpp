#include "sumsq/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sumsq::series {

IntSeries::IntSeries(std::size_t order) : coeffs_(order + 1) {}

IntSeries::IntSeries(std::size_t order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != order + 1) {
        throw std::invalid_argument("IntSeries: coefficient count must equal order + 1");
    }
}

IntSeries IntSeries::one(std::size_t order)
{
    IntSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

IntSeries IntSeries::monomial(std::size_t order, std::size_t k, const BigInt& c)
{
    IntSeries s(order);
    if (k <= order) {
        s.coeffs_[k] = c;
    }
    return s;
}

IntSeries IntSeries::from_ints(std::size_t order, std::span<const std::int64_t> coeffs)
{
    IntSeries s(order);
    const std::size_t n = std::min(coeffs.size(), order + 1);
    for (std::size_t k = 0; k < n; ++k) {
        s.coeffs_[k] = coeffs[k];
    }
    return s;
}

IntSeries IntSeries::from_ints(std::size_t order, std::initializer_list<std::int64_t> coeffs)
{
    return from_ints(order, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

IntSeries IntSeries::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw std::out_of_range("IntSeries::truncated: cannot raise the order of a series");
    }
    return IntSeries(new_order, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

IntSeries IntSeries::operator-() const
{
    IntSeries r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

IntSeries& IntSeries::operator+=(const IntSeries& rhs)
{
    if (rhs.order() < order()) {
        coeffs_.resize(rhs.order() + 1);
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& rhs)
{
    if (rhs.order() < order()) {
        coeffs_.resize(rhs.order() + 1);
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

IntSeries& IntSeries::operator*=(const BigInt& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

void IntSeries::mul_binomial(std::size_t m, int sign)
{
    const std::size_t n = order();
    if (m > n) {
        return;
    }
    if (m == 0) {
        // (1 + sign) * s
        for (auto& c : coeffs_) {
            c *= (1 + sign);
        }
        return;
    }
    for (std::size_t k = n; k >= m; --k) {
        if (sign > 0) {
            coeffs_[k] += coeffs_[k - m];
        } else {
            coeffs_[k] -= coeffs_[k - m];
        }
    }
}

void IntSeries::div_binomial(std::size_t m, int sign)
{
    if (m == 0) {
        throw std::domain_error("div_binomial: factor has non-unit constant term");
    }
    // b * (1 + sign q^m) = a  =>  b_k = a_k - sign * b_{k-m}
    for (std::size_t k = m; k <= order(); ++k) {
        if (sign > 0) {
            coeffs_[k] -= coeffs_[k - m];
        } else {
            coeffs_[k] += coeffs_[k - m];
        }
    }
}

std::string IntSeries::to_string(std::size_t max_terms) const
{
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t k = 0; k <= order() && shown < max_terms; ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        if (shown > 0) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        const BigInt mag = abs(c);
        if (k == 0 || mag != 1) {
            os << mag;
        }
        if (k == 1) {
            os << "q";
        } else if (k > 1) {
            os << "q^" << k;
        }
        ++shown;
    }
    if (shown == 0) {
        os << "0";
    }
    os << " + O(q^" << order() + 1 << ")";
    return os.str();
}

IntSeries add(const IntSeries& a, const IntSeries& b)
{
    IntSeries r = a.order() <= b.order() ? a : a.truncated(b.order());
    r += b;
    return r;
}

IntSeries sub(const IntSeries& a, const IntSeries& b)
{
    IntSeries r = a.order() <= b.order() ? a : a.truncated(b.order());
    r -= b;
    return r;
}

IntSeries mul(const IntSeries& a, const IntSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigInt> out(n + 1);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i <= n; ++i) {
        if (ac[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (bc[j] != 0) {
                out[i + j] += ac[i] * bc[j];
            }
        }
    }
    return IntSeries(n, std::move(out));
}

IntSeries invert(const IntSeries& a)
{
    const BigInt& a0 = a[0];
    if (a0 != 1 && a0 != -1) {
        throw std::domain_error("not invertible over integers");
    }
    const std::size_t n = a.order();
    const auto& ac = a.coeffs();
    std::vector<BigInt> b(n + 1);
    b[0] = a0; // 1/a0 == a0 for a0 = +-1
    BigInt acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (ac[j] != 0) {
                acc += ac[j] * b[k - j];
            }
        }
        b[k] = -a0 * acc;
    }
    return IntSeries(n, std::move(b));
}

IntSeries pow(const IntSeries& a, std::int64_t e)
{
    if (e < 0) {
        return pow(invert(a), -e);
    }
    IntSeries result = IntSeries::one(a.order());
    IntSeries base = a;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

namespace {

IntSeries product_of_binomials(std::int64_t a, std::int64_t b, std::int64_t e, std::size_t order,
                               int sign)
{
    if (a < 1 || b < 1) {
        throw std::invalid_argument("pochhammer: base exponents must be positive");
    }
    IntSeries s = IntSeries::one(order);
    if (e == 0) {
        return s;
    }
    // Factors 1 +- q^m with m > order are congruent to 1 and are dropped.
    for (auto m = static_cast<std::size_t>(a); m <= order; m += static_cast<std::size_t>(b)) {
        for (std::int64_t i = 0; i < (e > 0 ? e : -e); ++i) {
            if (e > 0) {
                s.mul_binomial(m, sign);
            } else {
                s.div_binomial(m, sign);
            }
        }
    }
    return s;
}

} // namespace

IntSeries pochhammer(std::int64_t a, std::int64_t b, std::int64_t e, std::size_t order)
{
    return product_of_binomials(a, b, e, order, -1);
}

IntSeries neg_pochhammer(std::int64_t a, std::int64_t b, std::int64_t e, std::size_t order)
{
    return product_of_binomials(a, b, e, order, +1);
}

IntSeries theta_signed(std::size_t order)
{
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (std::size_t m = 1; m * m <= order; ++m) {
        c[m * m] = (m % 2 == 0) ? 2 : -2;
    }
    return IntSeries(order, std::move(c));
}

Comparison equal_to_order(const IntSeries& a, const IntSeries& b, std::size_t order)
{
    if (order > a.order() || order > b.order()) {
        throw std::out_of_range("equal_to_order: requested order exceeds an operand's order");
    }
    for (std::size_t k = 0; k <= order; ++k) {
        if (a[k] != b[k]) {
            return Comparison{false, Mismatch{k, a[k], b[k]}};
        }
    }
    return Comparison{};
}

} // namespace sumsq::series
