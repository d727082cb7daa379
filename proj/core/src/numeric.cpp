#include "sumsq/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "sumsq/errors.hpp"

namespace sumsq::numeric {

namespace {

constexpr int kMaxTruncation = 20000;

double mag(const Complex& z) { return abs(z).to_double(); }

Complex one(const EvalContext& ctx) { return Complex(1.0, ctx.bits()); }

std::string describe(std::complex<double> v)
{
    std::ostringstream os;
    os << '(' << v.real() << ',' << v.imag() << ')';
    return os.str();
}

[[noreturn]] void no_convergence(const char* what)
{
    throw DomainError(std::string(what) + ": truncation bound did not reach the tail budget");
}

void check_pole(const Complex& denominator, const EvalContext& ctx, const char* what)
{
    if (mag(denominator) < 10.0 * ctx.tail_budget()) {
        throw PoleProximityError(std::string("sample too close to pole in ") + what);
    }
}

// Bound on sum over r, s >= m with max(r, s) > K of rho^(rs) a^r b^s.
// Valid when rho*a < 1, rho*b < 1 (m = 1) or a, b < 1 (m = 0), and
// b rho^(K+1), a rho^(K+1) < 1. Returns +inf when not yet valid.
double lattice2_tail(double rho, double a, double b, int m, int K)
{
    const double inf = std::numeric_limits<double>::infinity();
    const double rk = std::pow(rho, K + 1);
    const double va = a * rk;
    const double vb = b * rk;
    const double ua = std::pow(rho, m) * a;
    const double ub = std::pow(rho, m) * b;
    if (va >= 1.0 || vb >= 1.0 || ua >= 1.0 || ub >= 1.0) {
        return inf;
    }
    const double part_a = std::pow(a, K + 1) / (1.0 - ua) * std::pow(vb, m) / (1.0 - vb);
    const double part_b = std::pow(b, K + 1) / (1.0 - ub) * std::pow(va, m) / (1.0 - va);
    return part_a + part_b;
}

void require_lattice2(double rho, double a, double b, int m, const char* what)
{
    const bool ok = (m == 0) ? (a < 1.0 && b < 1.0) : (m == 1 && rho * a < 1.0 && rho * b < 1.0);
    if (!ok) {
        throw DomainError(std::string(what) + ": double lattice sum outside its region of convergence");
    }
}

int choose_lattice2_K(double rho, double a, double b, int m, double scale, double budget, int min_K,
                      const char* what)
{
    for (int K = std::max(min_K, m); K <= kMaxTruncation; ++K) {
        if (scale * lattice2_tail(rho, a, b, m, K) <= budget) {
            return K;
        }
    }
    no_convergence(what);
}

bool near_integral_power(std::complex<double> v, std::complex<double> q)
{
    const double rho = std::abs(q);
    if (v == 0.0 || rho == 0.0) {
        return false;
    }
    const double n = std::round(std::log(std::abs(v)) / std::log(rho));
    for (double k = n - 1; k <= n + 1; k += 1.0) {
        if (std::abs(k) > 1e6) {
            continue;
        }
        const std::complex<double> p = std::pow(q, k);
        if (std::abs(v - p) <= 1e-9 * std::abs(v)) {
            return true;
        }
    }
    return false;
}

void require_annulus(std::complex<double> v, double rho, const char* name)
{
    const double r = std::abs(v);
    if (!(rho < r && r < 1.0)) {
        throw DomainError(std::string("hypothesis violated: need |q| < |") + name + "| < 1, got " + name + " = " +
                          describe(v));
    }
}

void require_q(std::complex<double> q)
{
    const double rho = std::abs(q);
    if (!(rho > 0.0 && rho < 1.0)) {
        throw DomainError("hypothesis violated: need 0 < |q| < 1, got q = " + describe(q));
    }
}

Certified pochhammer_list(std::initializer_list<Complex> args, const Complex& q, const EvalContext& ctx)
{
    Certified acc = exact(one(ctx));
    for (const Complex& a : args) {
        acc = acc * eval_pochhammer_num(a, q, ctx);
    }
    return acc;
}

NumericCheckResult compare(std::string identity, std::string variant, const Sides& sides, const EvalContext& ctx)
{
    NumericCheckResult r;
    r.identity = std::move(identity);
    r.variant = std::move(variant);
    r.relative_error = relative_difference(sides.lhs.value, sides.rhs.value);
    const double scale = std::max(mag(sides.lhs.value), mag(sides.rhs.value));
    r.certificate = (sides.lhs.error + sides.rhs.error) / (scale > 0.0 ? scale : 1.0);
    r.passed = r.relative_error < ctx.tolerance && r.certificate < ctx.tolerance;
    r.lhs = sides.lhs.value.to_std();
    r.rhs = sides.rhs.value.to_std();
    return r;
}

} // namespace

double EvalContext::tail_budget() const { return tail_budget_override.value_or(tolerance * 1e-3); }

mpfr_prec_t EvalContext::bits() const { return mp::digits_to_bits(precision_digits); }

void EvalContext::validate() const
{
    if (precision_digits < 10 || precision_digits > 10000) {
        throw DomainError("precision must be between 10 and 10000 digits");
    }
    if (!(tolerance > 0.0 && tolerance < 1.0)) {
        throw DomainError("tolerance must lie in (0, 1)");
    }
    const double budget = tail_budget();
    if (!(budget > 0.0 && budget < tolerance / 10.0)) {
        throw DomainError("tail budget must lie in (0, tolerance/10)");
    }
}

Certified operator*(const Certified& a, const Certified& b)
{
    const double ma = mag(a.value);
    const double mb = mag(b.value);
    return Certified{a.value * b.value, ma * b.error + mb * a.error + a.error * b.error};
}

Certified operator/(const Certified& a, const Certified& b)
{
    const double ma = mag(a.value);
    const double mb = mag(b.value);
    if (b.error >= mb) {
        throw PoleProximityError("divisor is not bounded away from zero by its certificate");
    }
    return Certified{a.value / b.value, (a.error * mb + ma * b.error) / (mb * (mb - b.error))};
}

Certified operator+(const Certified& a, const Certified& b)
{
    return Certified{a.value + b.value, a.error + b.error};
}

Certified operator-(const Certified& a, const Certified& b)
{
    return Certified{a.value - b.value, a.error + b.error};
}

Certified exact(Complex v) { return Certified{std::move(v), 0.0}; }

double relative_difference(const Complex& a, const Complex& b)
{
    const double diff = mag(a - b);
    const double scale = std::max(mag(a), mag(b));
    return scale > 0.0 ? diff / scale : diff;
}

Certified eval_pochhammer_num(const Complex& a, const Complex& q, const EvalContext& ctx)
{
    const double rho = mag(q);
    if (!(rho < 1.0)) {
        throw DomainError("eval_pochhammer_num: need |q| < 1");
    }
    const double alpha = mag(a);
    Complex prod(1.0, ctx.bits());
    if (alpha == 0.0) {
        return exact(std::move(prod));
    }
    // Log-tail bound: sum_{k>=K} |a| rho^k = |a| rho^K / (1 - rho).
    const double budget = ctx.tail_budget();
    int K = 0;
    double tail = alpha / (1.0 - rho);
    while (tail > budget) {
        if (++K > kMaxTruncation) {
            no_convergence("eval_pochhammer_num");
        }
        tail *= rho;
    }
    Complex term = a;
    for (int k = 0; k < K; ++k) {
        prod *= one(ctx) - term;
        term *= q;
    }
    return Certified{prod, mag(prod) * std::expm1(tail)};
}

Certified appell_lerch(const Complex& w, const Complex& c, const Complex& q, const EvalContext& ctx)
{
    const double rho = mag(q);
    const double aw = mag(w);
    const double ac = mag(c);
    if (!(rho > 0.0 && rho < 1.0) || aw == 0.0 || ac == 0.0) {
        throw DomainError("appell_lerch: need 0 < |q| < 1 and nonzero w, c");
    }
    const double budget = ctx.tail_budget();
    const double lr = std::log(rho);
    const double lw = std::log(aw);
    const double lc = std::log(ac);
    const double half_budget_log = std::log(budget / 2.0);

    // k >= K: |1 + q^(2k) c| >= 1/2 once rho^(2K)|c| <= 1/2, terms decrease by
    // at most rho^(2K+1)|w| per step.
    int K = 1;
    for (;; ++K) {
        if (K > kMaxTruncation) {
            no_convergence("appell_lerch");
        }
        if (2.0 * K * lr + lc > std::log(0.5)) {
            continue;
        }
        const double theta = std::exp((2.0 * K + 1.0) * lr + lw);
        if (theta >= 1.0) {
            continue;
        }
        const double log_tail = std::log(2.0) + double(K) * K * lr + K * lw - std::log1p(-theta);
        if (log_tail <= half_budget_log) {
            break;
        }
    }
    // k = -m, m >= M: |1 + q^(-2m) c| = |q^(2m) + c| / rho^(2m) and the term is
    // at most 2 rho^(m^2+2m) |w|^-m / |c| once rho^(2M) <= |c|/2.
    int M = 1;
    for (;; ++M) {
        if (M > kMaxTruncation) {
            no_convergence("appell_lerch");
        }
        if (2.0 * M * lr > lc + std::log(0.5)) {
            continue;
        }
        const double phi = std::exp((2.0 * M + 3.0) * lr - lw);
        if (phi >= 1.0) {
            continue;
        }
        const double log_tail =
            std::log(2.0) + (double(M) * M + 2.0 * M) * lr - M * lw - lc - std::log1p(-phi);
        if (log_tail <= half_budget_log) {
            break;
        }
    }

    Complex sum(ctx.bits());
    for (int k = 0; k < K; ++k) {
        const Complex den = one(ctx) + pow(q, 2 * k) * c;
        check_pole(den, ctx, "Appell-Lerch sum");
        Complex term = pow(q, std::int64_t(k) * k) * pow(w, k) / den;
        if (k % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    for (int m = 1; m < M; ++m) {
        const Complex den = one(ctx) + pow(q, -2 * m) * c;
        check_pole(den, ctx, "Appell-Lerch sum");
        Complex term = pow(q, std::int64_t(m) * m) * pow(w, -m) / den;
        if (m % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    return Certified{sum, budget};
}

Certified appell_lerch_sum(const Complex& x, const Complex& y, const Complex& z, const Complex& q,
                           const EvalContext& ctx)
{
    return appell_lerch(x * y, z, q, ctx);
}

Certified lattice_sum2(const Complex& X, const Complex& Y, const Complex& q, int m, const EvalContext& ctx)
{
    const double rho = mag(q);
    const double a = mag(X);
    const double b = mag(Y);
    require_lattice2(rho, a, b, m, "lattice_sum2");
    const int K = choose_lattice2_K(rho, a, b, m, 1.0, ctx.tail_budget(), 0, "lattice_sum2");

    Complex total(ctx.bits());
    Complex ys = pow(Y, m);
    Complex qs = pow(q, m);
    for (int s = m; s <= K; ++s) {
        const Complex u = qs * X;
        Complex ur = pow(u, m);
        Complex row(ctx.bits());
        for (int r = m; r <= K; ++r) {
            row += ur;
            ur *= u;
        }
        total += ys * row;
        ys *= Y;
        qs *= q;
    }
    return Certified{total, lattice2_tail(rho, a, b, m, K)};
}

Certified lattice_sum3(const Complex& X, const Complex& Y, const Complex& Z, const Complex& q, int m,
                       const EvalContext& ctx)
{
    if (m != 0 && m != 1) {
        throw DomainError("lattice_sum3: m must be 0 or 1");
    }
    const double rho = mag(q);
    const double a = mag(X);
    const double b = mag(Y);
    const double c = mag(Z);
    const double rm = std::pow(rho, m);
    // Inner ratio in r is u(s,t) = rho^(s+t) a, largest at s = t = m.
    const double inner_max = std::pow(rho, 2 * m) * a;
    const double B = rm * b;
    const double C = rm * c;
    if (!(inner_max < 1.0 && B < 1.0 && C < 1.0) || a == 0.0 || b == 0.0 || c == 0.0 || rho == 0.0) {
        throw DomainError("lattice_sum3: triple lattice sum outside its region of convergence");
    }
    const double budget = ctx.tail_budget();
    const double lead = std::pow(a, m) / (1.0 - inner_max);
    // Pairs (s, t) outside [m, K]^2, dropping rho^(st) <= 1.
    const auto outside = [&](int K) {
        return lead * (std::pow(B, K + 1) / (1.0 - B) * std::pow(C, m) / (1.0 - C) +
                       std::pow(C, K + 1) / (1.0 - C) * std::pow(B, m) / (1.0 - B));
    };
    int K = m;
    while (outside(K) > budget / 3.0) {
        if (++K > kMaxTruncation) {
            no_convergence("lattice_sum3");
        }
    }
    const double npairs = double(K - m + 1) * double(K - m + 1);
    const double threshold = budget / (3.0 * npairs);
    const double log_threshold = std::log(threshold);
    const double lr = std::log(rho);
    const double la = std::log(a);
    const double lb = std::log(b);
    const double lc = std::log(c);

    std::vector<Complex> ypow;
    std::vector<Complex> zpow;
    std::vector<Complex> qpow;
    ypow.reserve(static_cast<std::size_t>(K) + 1);
    zpow.reserve(static_cast<std::size_t>(K) + 1);
    qpow.reserve(2 * static_cast<std::size_t>(K) + 1);
    ypow.push_back(one(ctx));
    zpow.push_back(one(ctx));
    qpow.push_back(one(ctx));
    for (int i = 1; i <= K; ++i) {
        ypow.push_back(ypow.back() * Y);
        zpow.push_back(zpow.back() * Z);
    }
    for (int i = 1; i <= 2 * K; ++i) {
        qpow.push_back(qpow.back() * q);
    }

    double error = outside(K);
    Complex total(ctx.bits());
    for (int s = m; s <= K; ++s) {
        for (int t = m; t <= K; ++t) {
            const double log_u = (s + t) * lr + la;
            const double u = std::exp(log_u);
            const double log_coeff = double(s) * t * lr + s * lb + t * lc;
            const double log_weight = log_coeff + m * log_u - std::log1p(-u);
            if (log_weight < log_threshold) {
                error += std::exp(log_weight);
                continue;
            }
            // Smallest R >= m with coeff * u^R / (1 - u) <= threshold.
            int R = m;
            while (log_coeff + R * log_u - std::log1p(-u) > log_threshold) {
                ++R;
            }
            error += std::exp(log_coeff + R * log_u - std::log1p(-u));
            const Complex ratio = qpow[static_cast<std::size_t>(s + t)] * X;
            Complex inner(ctx.bits());
            Complex ur = pow(ratio, m);
            for (int r = m; r < R; ++r) {
                inner += ur;
                ur *= ratio;
            }
            total += pow(q, std::int64_t(s) * t) * ypow[static_cast<std::size_t>(s)] *
                     zpow[static_cast<std::size_t>(t)] * inner;
        }
    }
    return Certified{total, error};
}

std::string_view to_string(KroneckerVariant v)
{
    switch (v) {
    case KroneckerVariant::original:
        return "original";
    case KroneckerVariant::symmetric:
        return "symmetric";
    case KroneckerVariant::rewritten:
        return "rewritten";
    }
    return "?";
}

std::string_view to_string(Theorem11Lhs v)
{
    return v == Theorem11Lhs::kernel ? "kernel-lhs" : "symmetric-lhs";
}

void require_kronecker_hypotheses(const EvalContext& ctx, KroneckerVariant variant)
{
    const SamplePoint& p = ctx.point;
    require_q(p.q);
    const double rho = std::abs(p.q);
    require_annulus(p.x, rho, "x");
    if (p.y == 0.0 || near_integral_power(p.y, p.q)) {
        throw DomainError("hypothesis violated: y must be nonzero and not an integral power of q");
    }
    if (variant != KroneckerVariant::original) {
        require_annulus(p.y, rho, "y");
    }
}

namespace {

Certified kronecker_rhs(const Complex& x, const Complex& y, const Complex& q, const EvalContext& ctx)
{
    const Complex xy = x * y;
    const Certified num = pochhammer_list({q, q, xy, q / xy}, q, ctx);
    const Certified den = pochhammer_list({x, q / x, y, q / y}, q, ctx);
    return num / den;
}

// sum_{r in Z} x^r / (1 - y q^r), |q| < |x| < 1.
Certified kronecker_lhs_original(const Complex& x, const Complex& y, const Complex& q, const EvalContext& ctx)
{
    const double rho = mag(q);
    const double ax = mag(x);
    const double ay = mag(y);
    const double budget = ctx.tail_budget();
    // r >= R: |1 - y q^r| >= 1/2 once |y| rho^R <= 1/2; tail <= 2|x|^R/(1-|x|).
    int R = 0;
    while (ay * std::pow(rho, R) > 0.5 || 2.0 * std::pow(ax, R) / (1.0 - ax) > budget / 2.0) {
        if (++R > kMaxTruncation) {
            no_convergence("kronecker original");
        }
    }
    // r = -m: x^-m / (1 - y q^-m) = (q/x)^m / (q^m - y); |q^m - y| >= |y|/2 once
    // rho^M <= |y|/2, tail <= 2 |q/x|^M / (|y| (1 - |q/x|)).
    const double gx = rho / ax;
    int M = 1;
    while (std::pow(rho, M) > ay / 2.0 || 2.0 * std::pow(gx, M) / (ay * (1.0 - gx)) > budget / 2.0) {
        if (++M > kMaxTruncation) {
            no_convergence("kronecker original");
        }
    }
    Complex sum(ctx.bits());
    Complex xr = one(ctx);
    Complex qr = one(ctx);
    for (int r = 0; r < R; ++r) {
        const Complex den = one(ctx) - y * qr;
        check_pole(den, ctx, "Kronecker sum");
        sum += xr / den;
        xr *= x;
        qr *= q;
    }
    const Complex xi = one(ctx) / x;
    const Complex qi = one(ctx) / q;
    Complex xm = xi;
    Complex qm = qi;
    for (int m = 1; m < M; ++m) {
        const Complex den = one(ctx) - y * qm;
        check_pole(den, ctx, "Kronecker sum");
        sum += xm / den;
        xm *= xi;
        qm *= qi;
    }
    return Certified{sum, budget};
}

} // namespace

Sides kronecker_sides(const EvalContext& ctx, KroneckerVariant variant)
{
    ctx.validate();
    require_kronecker_hypotheses(ctx, variant);
    const Complex q = ctx.mp(ctx.point.q);
    const Complex x = ctx.mp(ctx.point.x);
    const Complex y = ctx.mp(ctx.point.y);
    switch (variant) {
    case KroneckerVariant::original:
        return Sides{kronecker_lhs_original(x, y, q, ctx), kronecker_rhs(x, y, q, ctx)};
    case KroneckerVariant::symmetric: {
        const Certified pos = lattice_sum2(x, y, q, 0, ctx);
        const Certified neg = lattice_sum2(one(ctx) / x, one(ctx) / y, q, 1, ctx);
        return Sides{pos - neg, kronecker_rhs(x, y, q, ctx)};
    }
    case KroneckerVariant::rewritten: {
        const Complex xy = x * y;
        const Complex factor = (one(ctx) - x) * (one(ctx) - y) / (one(ctx) - xy);
        const Certified pos = lattice_sum2(x, y, q, 1, ctx);
        const Certified neg = lattice_sum2(one(ctx) / x, one(ctx) / y, q, 1, ctx);
        const Certified lhs = exact(one(ctx)) + exact(factor) * (pos - neg);
        const Certified num = pochhammer_list({xy * q, q / xy, q, q}, q, ctx);
        const Certified den = pochhammer_list({x * q, q / x, y * q, q / y}, q, ctx);
        return Sides{lhs, num / den};
    }
    }
    throw std::invalid_argument("unknown Kronecker variant");
}

NumericCheckResult check_kronecker(const EvalContext& ctx, KroneckerVariant variant)
{
    return compare("kronecker", std::string(to_string(variant)), kronecker_sides(ctx, variant), ctx);
}

void require_theorem_1_1_hypotheses(const EvalContext& ctx, Theorem11Lhs lhs)
{
    const SamplePoint& p = ctx.point;
    require_q(p.q);
    const double rho = std::abs(p.q);
    require_annulus(p.y, rho, "y");
    require_annulus(p.z, rho, "z");
    if (p.x == 0.0 || near_integral_power(p.x, p.q)) {
        throw DomainError("hypothesis violated: x must be nonzero and not an integral power of q");
    }
    if (lhs == Theorem11Lhs::symmetric) {
        require_annulus(p.x, rho, "x");
    }
}

Certified theorem_1_1_al_term(const Complex& a, const Complex& b, const Complex& c, const Complex& q,
                              const EvalContext& ctx)
{
    const Complex q2 = q * q;
    const Complex ab = a * b;
    const Certified theta_num = pochhammer_list({ab, q2 / ab}, q2, ctx);
    const Certified theta_den = pochhammer_list({a, b, q / a, q / b}, q, ctx);
    const Certified eta = pochhammer_list({q, q}, q, ctx) / eval_pochhammer_num(q2, q2, ctx);
    return theta_num / theta_den * eta * appell_lerch(ab, c, q, ctx);
}

Certified theorem_1_1_al_block(const EvalContext& ctx)
{
    const Complex q = ctx.mp(ctx.point.q);
    const Complex x = ctx.mp(ctx.point.x);
    const Complex y = ctx.mp(ctx.point.y);
    const Complex z = ctx.mp(ctx.point.z);
    // idem(z; x, y): z swapped with x, then z swapped with y.
    return theorem_1_1_al_term(x, y, z, q, ctx) + theorem_1_1_al_term(z, y, x, q, ctx) +
           theorem_1_1_al_term(x, z, y, q, ctx);
}

Certified theorem_1_1_theta_quotient(const EvalContext& ctx)
{
    const Complex q = ctx.mp(ctx.point.q);
    const Complex x = ctx.mp(ctx.point.x);
    const Complex y = ctx.mp(ctx.point.y);
    const Complex z = ctx.mp(ctx.point.z);
    const Complex q2 = q * q;
    const Certified eta = pochhammer_list({q2, q2, q2}, q2, ctx);
    const Certified den1 = pochhammer_list({x, y, z, q / x, q / y, q / z}, q, ctx);
    const Complex xy = x * y;
    const Complex xz = x * z;
    const Complex yz = y * z;
    const Certified num2 = pochhammer_list({xy, xz, yz, q2 / xy, q2 / xz, q2 / yz}, q2, ctx);
    const Certified den2 = pochhammer_list({-x, -y, -z, -(q2 / x), -(q2 / y), -(q2 / z)}, q2, ctx);
    return exact(Complex(-2.0, ctx.bits())) * (eta / den1) * (num2 / den2);
}

namespace {

// (sum_{s,t>=0} - sum_{s,t<0}) q^(st) y^s z^t / (1 - x q^(s+t)).
Certified theorem_1_1_kernel_lhs(const EvalContext& ctx)
{
    const Complex q = ctx.mp(ctx.point.q);
    const Complex x = ctx.mp(ctx.point.x);
    const Complex y = ctx.mp(ctx.point.y);
    const Complex z = ctx.mp(ctx.point.z);
    const double rho = mag(q);
    const double ax = mag(x);
    const double ay = mag(y);
    const double az = mag(z);
    const double budget = ctx.tail_budget();

    // s + t >= L0 keeps |1 - x q^(s+t)| >= 1/2.
    int L0 = 0;
    while (ax * std::pow(rho, L0) > 0.5) {
        ++L0;
    }
    const int Kp = choose_lattice2_K(rho, ay, az, 0, 2.0, budget / 2.0, L0, "theorem 1.1 kernel LHS");

    // Negative part, s,t >= 1: term = q^(st+s+t) y^-s z^-t / (q^(s+t) - x), at most
    // (2/|x|) rho^(st) (rho/|y|)^s (rho/|z|)^t once rho^(s+t) <= |x|/2.
    int L1 = 1;
    while (std::pow(rho, L1) > ax / 2.0) {
        ++L1;
    }
    const double by = rho / ay;
    const double bz = rho / az;
    const int Kn = choose_lattice2_K(rho, by, bz, 1, 2.0 / ax, budget / 2.0, L1, "theorem 1.1 kernel LHS");

    const int K = std::max(Kp, Kn);
    std::vector<Complex> kernel_pos;
    std::vector<Complex> kernel_neg;
    Complex qn = one(ctx);
    const Complex qi = one(ctx) / q;
    Complex qin = one(ctx);
    for (int n = 0; n <= 2 * K; ++n) {
        const Complex dp = one(ctx) - x * qn;
        const Complex dn = one(ctx) - x * qin;
        check_pole(dp, ctx, "theorem 1.1 kernel");
        check_pole(dn, ctx, "theorem 1.1 kernel");
        kernel_pos.push_back(one(ctx) / dp);
        kernel_neg.push_back(one(ctx) / dn);
        qn *= q;
        qin *= qi;
    }

    Complex pos(ctx.bits());
    Complex ys = one(ctx);
    Complex qs = one(ctx);
    for (int s = 0; s <= Kp; ++s) {
        const Complex step = qs * z;
        Complex w = one(ctx);
        for (int t = 0; t <= Kp; ++t) {
            pos += ys * w * kernel_pos[static_cast<std::size_t>(s + t)];
            w *= step;
        }
        ys *= y;
        qs *= q;
    }

    Complex neg(ctx.bits());
    const Complex yi = one(ctx) / y;
    const Complex zi = one(ctx) / z;
    Complex yis = yi;
    Complex qs1 = q;
    for (int s = 1; s <= Kn; ++s) {
        const Complex step = qs1 * zi;
        Complex w = step;
        for (int t = 1; t <= Kn; ++t) {
            neg += yis * w * kernel_neg[static_cast<std::size_t>(s + t)];
            w *= step;
        }
        yis *= yi;
        qs1 *= q;
    }
    const double error = 2.0 * lattice2_tail(rho, ay, az, 0, Kp) + (2.0 / ax) * lattice2_tail(rho, by, bz, 1, Kn);
    return Certified{pos - neg, error};
}

} // namespace

Certified theorem_1_1_lhs(const EvalContext& ctx, Theorem11Lhs lhs)
{
    if (lhs == Theorem11Lhs::kernel) {
        return theorem_1_1_kernel_lhs(ctx);
    }
    const Complex q = ctx.mp(ctx.point.q);
    const Complex x = ctx.mp(ctx.point.x);
    const Complex y = ctx.mp(ctx.point.y);
    const Complex z = ctx.mp(ctx.point.z);
    return lattice_sum3(x, y, z, q, 0, ctx) +
           lattice_sum3(one(ctx) / x, one(ctx) / y, one(ctx) / z, q, 1, ctx);
}

Sides theorem_1_1_sides(const EvalContext& ctx, Theorem11Lhs lhs)
{
    ctx.validate();
    require_theorem_1_1_hypotheses(ctx, lhs);
    return Sides{theorem_1_1_lhs(ctx, lhs), theorem_1_1_al_block(ctx) + theorem_1_1_theta_quotient(ctx)};
}

NumericCheckResult check_theorem_1_1(const EvalContext& ctx, Theorem11Lhs lhs)
{
    return compare("theorem-1-1", std::string(to_string(lhs)), theorem_1_1_sides(ctx, lhs), ctx);
}

void require_partial_fraction_hypotheses(const EvalContext& ctx)
{
    require_q(ctx.point.q);
    if (ctx.point.z == 0.0 || near_integral_power(ctx.point.z, ctx.point.q)) {
        throw DomainError("hypothesis violated: z must be nonzero and not an integral power of q");
    }
}

Sides partial_fraction_sides(const EvalContext& ctx)
{
    ctx.validate();
    require_partial_fraction_hypotheses(ctx);
    const Complex q = ctx.mp(ctx.point.q);
    const Complex z = ctx.mp(ctx.point.z);
    const double rho = mag(q);
    const double az = mag(z);
    const double budget = ctx.tail_budget();

    // n >= K: |1 - q^n z| >= 1/2, terms at most 2 rho^(n(n+1)/2), ratio rho^(n+1).
    int K = 0;
    const auto pos_tail = [&](int n) {
        return 2.0 * std::pow(rho, 0.5 * n * (n + 1)) / (1.0 - std::pow(rho, n + 1));
    };
    while (az * std::pow(rho, K) > 0.5 || pos_tail(K) > budget / 2.0) {
        if (++K > kMaxTruncation) {
            no_convergence("partial fraction");
        }
    }
    // n = -m: (-1)^m q^(m(m+1)/2) / (q^m - z), at most 2 rho^(m(m+1)/2)/|z|.
    int M = 1;
    const auto neg_tail = [&](int m) {
        return 2.0 * std::pow(rho, 0.5 * m * (m + 1)) / (az * (1.0 - std::pow(rho, m + 1)));
    };
    while (std::pow(rho, M) > az / 2.0 || neg_tail(M) > budget / 2.0) {
        if (++M > kMaxTruncation) {
            no_convergence("partial fraction");
        }
    }
    Complex sum(ctx.bits());
    for (int n = -(M - 1); n < K; ++n) {
        const Complex den = one(ctx) - pow(q, n) * z;
        check_pole(den, ctx, "partial fraction");
        Complex term = pow(q, std::int64_t(n) * (n + 1) / 2) / den;
        if (n % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    const Certified lhs{sum, budget};
    const Certified rhs = pochhammer_list({q, q}, q, ctx) / pochhammer_list({z, q / z}, q, ctx);
    return Sides{lhs, rhs};
}

NumericCheckResult check_partial_fraction(const EvalContext& ctx)
{
    return compare("partial-fraction", "", partial_fraction_sides(ctx), ctx);
}

namespace {

constexpr std::array<std::pair<NumericIdentity, std::string_view>, 5> kNumericNames{{
    {NumericIdentity::kronecker, "kronecker"},
    {NumericIdentity::kronecker_sym, "kronecker-sym"},
    {NumericIdentity::kronecker_alt, "kronecker-alt"},
    {NumericIdentity::theorem_1_1, "theorem-1-1"},
    {NumericIdentity::partial_fraction, "partial-fraction"},
}};

} // namespace

std::string_view to_string(NumericIdentity id)
{
    for (const auto& [key, name] : kNumericNames) {
        if (key == id) {
            return name;
        }
    }
    return "unknown";
}

std::optional<NumericIdentity> parse_numeric_identity(std::string_view name)
{
    for (const auto& [key, n] : kNumericNames) {
        if (n == name) {
            return key;
        }
    }
    return std::nullopt;
}

std::vector<NumericCheckResult> run_numeric_identity(NumericIdentity id, const EvalContext& ctx)
{
    switch (id) {
    case NumericIdentity::kronecker:
        return {check_kronecker(ctx, KroneckerVariant::original)};
    case NumericIdentity::kronecker_sym:
        return {check_kronecker(ctx, KroneckerVariant::symmetric)};
    case NumericIdentity::kronecker_alt:
        return {check_kronecker(ctx, KroneckerVariant::rewritten)};
    case NumericIdentity::theorem_1_1:
        return {check_theorem_1_1(ctx, Theorem11Lhs::kernel), check_theorem_1_1(ctx, Theorem11Lhs::symmetric)};
    case NumericIdentity::partial_fraction:
        return {check_partial_fraction(ctx)};
    }
    throw std::invalid_argument("unknown numeric identity");
}

EscalationResult precision_escalation(NumericIdentity id, const EvalContext& ctx, int extra_digits)
{
    EvalContext high = ctx;
    high.precision_digits += extra_digits;
    const auto base = run_numeric_identity(id, ctx);
    const auto escalated = run_numeric_identity(id, high);
    EscalationResult out;
    out.stable = true;
    const double floor = std::pow(10.0, -ctx.precision_digits);
    for (std::size_t i = 0; i < base.size(); ++i) {
        out.base_error = std::max(out.base_error, base[i].relative_error);
        out.escalated_error = std::max(out.escalated_error, escalated[i].relative_error);
        if (escalated[i].relative_error > 10.0 * std::max(base[i].relative_error, floor)) {
            out.stable = false;
        }
    }
    return out;
}

} // namespace sumsq::numeric
