#pragma once

// Certified arbitrary-precision evaluation of the multivariate identities:
// Kronecker's bilateral sum in three printed forms, the double-sum analogue
// with its Appell-Lerch sums and theta quotient, and the partial-fraction
// expansion of the reciprocal theta product.
//
// Every infinite sum or product is truncated at the first index where a
// geometric tail bound drops below the context's tail budget. Each
// evaluation returns its value together with the accumulated bound.

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumsq/mpreal.hpp"

namespace sumsq::numeric {

using mp::Complex;

struct SamplePoint {
    std::complex<double> q;
    std::complex<double> x;
    std::complex<double> y;
    std::complex<double> z;
};

struct EvalContext {
    int precision_digits = 50;
    double tolerance = 1e-12;
    // Absolute truncation budget per sum or product. Unset means
    // tolerance * 1e-3; must stay below tolerance / 10.
    std::optional<double> tail_budget_override;
    SamplePoint point{};

    double tail_budget() const;
    mpfr_prec_t bits() const;
    // Parameter promoted to working precision.
    Complex mp(std::complex<double> v) const { return Complex(v, bits()); }
    // Throws DomainError on a non-positive precision, tolerance outside
    // (0, 1), or a budget not below tolerance / 10.
    void validate() const;
};

// A value with an absolute truncation-error bound.
struct Certified {
    Complex value;
    double error = 0.0;
};

Certified operator*(const Certified& a, const Certified& b);
Certified operator/(const Certified& a, const Certified& b);
Certified operator+(const Certified& a, const Certified& b);
Certified operator-(const Certified& a, const Certified& b);
Certified exact(Complex v);

// (a; q)_inf. Requires |q| < 1.
Certified eval_pochhammer_num(const Complex& a, const Complex& q, const EvalContext& ctx);

// sum_{k in Z} (-1)^k q^(k^2) w^k / (1 + q^(2k) c). Throws PoleProximityError
// if |1 + q^(2k) c| < 10 * tail budget for an evaluated k.
Certified appell_lerch(const Complex& w, const Complex& c, const Complex& q, const EvalContext& ctx);
// The sum above with w = x*y, c = z.
Certified appell_lerch_sum(const Complex& x, const Complex& y, const Complex& z, const Complex& q,
                           const EvalContext& ctx);

// sum_{r,s >= m} q^(rs) X^r Y^s, m in {0, 1}.
Certified lattice_sum2(const Complex& X, const Complex& Y, const Complex& q, int m, const EvalContext& ctx);
// sum_{r,s,t >= m} q^(rs+rt+st) X^r Y^s Z^t, m in {0, 1}.
Certified lattice_sum3(const Complex& X, const Complex& Y, const Complex& Z, const Complex& q, int m,
                       const EvalContext& ctx);

enum class KroneckerVariant { original, symmetric, rewritten };
enum class Theorem11Lhs { kernel, symmetric };

std::string_view to_string(KroneckerVariant v);
std::string_view to_string(Theorem11Lhs v);

struct Sides {
    Certified lhs;
    Certified rhs;
};

struct NumericCheckResult {
    std::string identity;
    std::string variant;
    bool passed = false;
    double relative_error = 0.0;
    // (lhs.error + rhs.error) / max(|lhs|, |rhs|)
    double certificate = 0.0;
    std::complex<double> lhs;
    std::complex<double> rhs;
};

// Throw DomainError if the context's point violates the hypotheses.
void require_kronecker_hypotheses(const EvalContext& ctx, KroneckerVariant variant);
void require_theorem_1_1_hypotheses(const EvalContext& ctx, Theorem11Lhs lhs);
void require_partial_fraction_hypotheses(const EvalContext& ctx);

Sides kronecker_sides(const EvalContext& ctx, KroneckerVariant variant);
NumericCheckResult check_kronecker(const EvalContext& ctx, KroneckerVariant variant);

// One summand of the Appell-Lerch block: theta prefactor times the sum with
// w = a*b, c = c.
Certified theorem_1_1_al_term(const Complex& a, const Complex& b, const Complex& c, const Complex& q,
                              const EvalContext& ctx);
// The term plus idem(z; x, y): T(x,y,z) + T(z,y,x) + T(x,z,y).
Certified theorem_1_1_al_block(const EvalContext& ctx);
Certified theorem_1_1_theta_quotient(const EvalContext& ctx);
Certified theorem_1_1_lhs(const EvalContext& ctx, Theorem11Lhs lhs);
Sides theorem_1_1_sides(const EvalContext& ctx, Theorem11Lhs lhs);
NumericCheckResult check_theorem_1_1(const EvalContext& ctx, Theorem11Lhs lhs);

Sides partial_fraction_sides(const EvalContext& ctx);
NumericCheckResult check_partial_fraction(const EvalContext& ctx);

// |a - b| / max(|a|, |b|), or |a - b| when both vanish.
double relative_difference(const Complex& a, const Complex& b);

// Numeric identities exposed on the command line.
enum class NumericIdentity { kronecker, kronecker_sym, kronecker_alt, theorem_1_1, partial_fraction };

std::string_view to_string(NumericIdentity id);
std::optional<NumericIdentity> parse_numeric_identity(std::string_view name);

// Runs every check an identity has at one point (theorem-1-1 has two LHS forms).
std::vector<NumericCheckResult> run_numeric_identity(NumericIdentity id, const EvalContext& ctx);

struct EscalationResult {
    double base_error = 0.0;
    double escalated_error = 0.0;
    bool stable = false;
};

// Re-runs a check at precision + extra_digits. Stable when the escalated
// relative difference does not exceed 10 * max(base, 10^-precision).
EscalationResult precision_escalation(NumericIdentity id, const EvalContext& ctx, int extra_digits = 20);

} // namespace sumsq::numeric
