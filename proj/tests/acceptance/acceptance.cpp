// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// line fails.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <thread>
#include <string>
#include <vector>

#include "sumsq/battery.hpp"
#include "sumsq/counts.hpp"
#include "sumsq/errors.hpp"
#include "sumsq/genfun.hpp"
#include "sumsq/qforms.hpp"

using namespace sumsq;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

bool series_ok(genfun::IdentityId id, std::size_t order, Outcome& o)
{
    for (const auto& r : genfun::run_identity(id, order)) {
        if (!r.passed) {
            o.fail(std::string(genfun::to_string(id)) + " " + r.label + " mismatch at q^" +
                   std::to_string(r.first_mismatch ? r.first_mismatch->exponent : 0));
        }
    }
    return o.ok;
}

Outcome ac01()
{
    Outcome o;
    for (std::int64_t n = 1; n <= 5000 && o.ok; ++n) {
        if (counts::andrews_crandall_r3(n) != counts::r_squares(3, n)) {
            o.fail("n=" + std::to_string(n));
        }
    }
    o.detail = o.ok ? "n<=5000" : o.detail;
    return o;
}

Outcome ac02()
{
    Outcome o;
    series_ok(genfun::IdentityId::andrews516, 500, o);
    o.detail = o.ok ? "order 500" : o.detail;
    return o;
}

Outcome ac03()
{
    Outcome o;
    series_ok(genfun::IdentityId::gauss_gen, 500, o);
    series_ok(genfun::IdentityId::eta_limits, 200, o);
    o.detail = o.ok ? "gauss-gen order 500, eta-limits order 200" : o.detail;
    return o;
}

Outcome ac04()
{
    Outcome o;
    series_ok(genfun::IdentityId::eyphka, 500, o);
    const auto t = counts::r_triangular3_table(100000);
    for (std::size_t n = 0; n < t.size() && o.ok; ++n) {
        if (t[n] < 1) {
            o.fail("r3delta(" + std::to_string(n) + ") = 0");
        }
    }
    o.detail = o.ok ? "order 500, r3delta>=1 for n<=100000" : o.detail;
    return o;
}

template <class F>
Outcome sweep(std::int64_t from, std::int64_t to, std::int64_t step, const char* what, F&& check)
{
    Outcome o;
    std::int64_t checked = 0;
    for (std::int64_t n = from; n <= to && o.ok; n += step) {
        try {
            if (!check(n)) {
                o.fail(std::string(what) + " fails at " + std::to_string(n));
            }
            ++checked;
        } catch (const std::exception& e) {
            o.fail(std::string(what) + " threw at " + std::to_string(n) + ": " + e.what());
        }
    }
    if (o.ok) {
        o.detail = std::to_string(checked) + " cases";
    }
    return o;
}

Outcome ac05() { return sweep(1, 2000, 1, "gauss_r3", qforms::gauss_r3_check); }

Outcome ac06()
{
    return sweep(1, 1000, 1, "gauss_N3",
                 [](std::int64_t n) { return !qforms::gauss_N3_applies(n) || qforms::gauss_N3_check(n); });
}

Outcome ac07()
{
    return sweep(1, 4000, 1, "hurwitz", [](std::int64_t N) {
        if (N % 4 == 1 || N % 4 == 2) {
            return true;
        }
        return qforms::hurwitz_direct(N) == qforms::hurwitz_divisor_sum(N);
    });
}

Outcome ac08() { return sweep(3, 2000, 4, "4n lemma", qforms::hurwitz_4n_lemma_check); }

Outcome ac09()
{
    Outcome o;
    std::int64_t checked = 0;
    for (std::int64_t m = 3; m <= 200 && o.ok; ++m) {
        if (!qforms::is_fundamental(-m)) {
            continue;
        }
        for (std::int64_t f = 1; f <= 6 && o.ok; ++f) {
            if (!qforms::dirichlet_ratio_check(-m, f)) {
                o.fail("D0=" + std::to_string(-m) + " f=" + std::to_string(f));
            }
            ++checked;
        }
    }
    if (o.ok) {
        o.detail = std::to_string(checked) + " (D0, f) pairs, |D0|<=200, f<=6";
    }
    return o;
}

Outcome ac10()
{
    Outcome o = sweep(1, 5000, 1, "decomposition/parity", [](std::int64_t n) {
        const auto d = counts::decompose_solutions(n);
        if (d.total != 6 * d.strict + 3 * d.two_equal + d.all_equal) {
            return false;
        }
        return !(n % 4 == 1 || n % 4 == 2) || counts::parity_lemma_check(n);
    });
    if (o.ok) {
        o = sweep(1, 2000, 1, "propositions", counts::proposition_checks);
        o.detail = o.ok ? "n<=5000, propositions n<=2000" : o.detail;
    }
    return o;
}

Outcome ac11()
{
    return sweep(1, 5000, 1, "r4/r2", [](std::int64_t n) {
        return 8 * counts::sigma_no4(n) == counts::r_squares(4, n) &&
               4 * (counts::divisor_count_mod4(n, 1) - counts::divisor_count_mod4(n, 3)) == counts::r_squares(2, n);
    });
}

Outcome ac12()
{
    using namespace sumsq::numeric;
    Outcome o;
    EvalContext ctx;
    ctx.precision_digits = 50;
    ctx.tolerance = 1e-9;
    std::string summary;
    for (NumericIdentity id : {NumericIdentity::kronecker, NumericIdentity::kronecker_sym,
                               NumericIdentity::kronecker_alt, NumericIdentity::theorem_1_1,
                               NumericIdentity::partial_fraction}) {
        const auto& pts = frozen_battery(id);
        const auto rep = run_battery(id, ctx, pts, std::max(1u, std::thread::hardware_concurrency()));
        if (!rep.ok() || rep.passed < 20) {
            o.fail(std::string(to_string(id)) + ": " + std::to_string(rep.passed) + " passed, " +
                   std::to_string(rep.failed) + " failed");
            continue;
        }
        // Escalation on the first point that was not skipped.
        for (const auto& s : rep.samples) {
            if (s.status != SampleStatus::passed) {
                continue;
            }
            EvalContext one = ctx;
            one.point = pts[s.index];
            if (!precision_escalation(id, one).stable) {
                o.fail(std::string(to_string(id)) + ": unstable under +20 digits");
            }
            break;
        }
        summary += std::string(summary.empty() ? "" : ", ") + std::string(to_string(id)) + " " +
                   std::to_string(rep.passed) + "/" + std::to_string(pts.size());
    }
    if (o.ok) {
        o.detail = summary;
    }
    return o;
}

Outcome ac13()
{
    return sweep(1, 2000, 1, "bijection", [](std::int64_t n) { return qforms::bijection_census(n).ok(); });
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC-01 andrews-crandall formula", ac01},
        {"AC-02 andrews series identity", ac02},
        {"AC-03 gauss generating function and eta limits", ac03},
        {"AC-04 triangular series and r3delta positivity", ac04},
        {"AC-05 gauss r3 class-number formula", ac05},
        {"AC-06 gauss primitive N3 formula", ac06},
        {"AC-07 hurwitz direct vs divisor sum", ac07},
        {"AC-08 hurwitz 4n lemma", ac08},
        {"AC-09 dirichlet class-number ratio", ac09},
        {"AC-10 decomposition, parity and propositions", ac10},
        {"AC-11 r4 and r2 divisor formulas", ac11},
        {"AC-12 numeric batteries and escalation", ac12},
        {"AC-13 solution-to-form bijection", ac13},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-48s %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
        failures += !o.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
