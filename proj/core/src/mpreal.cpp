#include "sumsq/mpreal.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sumsq::mp {

mpfr_prec_t digits_to_bits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.3219280948873623)) + 8;
}

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    // Leave `other` as a valid minimal-precision value.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::widen_to(mpfr_prec_t bits)
{
    if (bits > precision()) {
        mpfr_prec_round(value_, bits, MPFR_RNDN);
    }
}

std::string Real::to_string(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return std::string(buf.data());
}

Real& Real::operator+=(const Real& rhs)
{
    widen_to(rhs.precision());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs)
{
    widen_to(rhs.precision());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs)
{
    widen_to(rhs.precision());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs)
{
    widen_to(rhs.precision());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a)
{
    Real r(a.precision());
    mpfr_sqrt(r.value_, a.value_, MPFR_RNDN);
    return r;
}

Real abs(const Real& a)
{
    Real r(a.precision());
    mpfr_abs(r.value_, a.value_, MPFR_RNDN);
    return r;
}

Real hypot(const Real& a, const Real& b)
{
    Real r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

std::string Complex::to_string(int digits) const
{
    std::string im = im_.to_string(digits);
    if (im.front() != '-') {
        im.insert(im.begin(), '+');
    }
    return re_.to_string(digits) + " " + im.substr(0, 1) + " " + im.substr(1) + "i";
}

Complex& Complex::operator+=(const Complex& rhs)
{
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& rhs)
{
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Complex& Complex::operator*=(const Complex& rhs)
{
    Real re = re_ * rhs.re_ - im_ * rhs.im_;
    Real im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex& Complex::operator/=(const Complex& rhs)
{
    const Real denom = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Real re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
    Real im = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Complex pow(const Complex& z, std::int64_t n)
{
    if (n < 0) {
        return Complex(1.0, z.precision()) / pow(z, -n);
    }
    Complex result(1.0, z.precision());
    Complex base = z;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

} // namespace sumsq::mp
