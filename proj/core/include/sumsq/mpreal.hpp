#pragma once

// Minimal RAII wrappers over MPFR. Every value carries its own precision,
// so evaluations at different precisions can run on different threads
// without touching any process-wide default.

#include <complex>
#include <cstdint>
#include <string>

#include <mpfr.h>

namespace sumsq::mp {

// Bits needed for `digits` significant decimal digits, plus a few guard bits.
mpfr_prec_t digits_to_bits(int digits);

class Real {
public:
    explicit Real(mpfr_prec_t bits);
    Real(double value, mpfr_prec_t bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    // Scientific notation with `digits` significant digits.
    std::string to_string(int digits = 20) const;
    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    int sign() const noexcept { return mpfr_sgn(value_); }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real operator-() const;

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

    friend Real sqrt(const Real& a);
    friend Real abs(const Real& a);
    friend Real hypot(const Real& a, const Real& b);

    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }

private:
    // Raises this value's precision to at least `bits`, preserving it.
    void widen_to(mpfr_prec_t bits);

    mpfr_t value_;
};

class Complex {
public:
    explicit Complex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
    Complex(const Real& re, const Real& im) : re_(re), im_(im) {}
    Complex(std::complex<double> z, mpfr_prec_t bits) : re_(z.real(), bits), im_(z.imag(), bits) {}
    Complex(double re, mpfr_prec_t bits) : re_(re, bits), im_(bits) {}

    const Real& real() const noexcept { return re_; }
    const Real& imag() const noexcept { return im_; }
    mpfr_prec_t precision() const noexcept { return re_.precision(); }
    std::complex<double> to_std() const noexcept { return {re_.to_double(), im_.to_double()}; }
    std::string to_string(int digits = 20) const;

    Complex& operator+=(const Complex& rhs);
    Complex& operator-=(const Complex& rhs);
    Complex& operator*=(const Complex& rhs);
    Complex& operator/=(const Complex& rhs);
    Complex operator-() const { return Complex(-re_, -im_); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    friend Complex conj(const Complex& z) { return Complex(z.re_, -z.im_); }
    friend Real abs(const Complex& z) { return hypot(z.re_, z.im_); }
    // z^n by binary exponentiation; negative n inverts.
    friend Complex pow(const Complex& z, std::int64_t n);

private:
    Real re_;
    Real im_;
};

} // namespace sumsq::mp
