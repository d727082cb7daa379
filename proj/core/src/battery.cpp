#include "sumsq/battery.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "sumsq/errors.hpp"

namespace sumsq::numeric {

namespace {

// Uniform on [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

double quantize(double v) { return std::round(v * 65536.0) / 65536.0; }

std::complex<double> polar_sample(std::mt19937_64& rng, double radius)
{
    const double arg = 2.0 * std::numbers::pi * unit(rng);
    const std::complex<double> v = std::polar(radius, arg);
    return {quantize(v.real()), quantize(v.imag())};
}

std::uint64_t identity_salt(NumericIdentity id) { return static_cast<std::uint64_t>(id) * 0x9e3779b97f4a7c15ULL; }

#include "battery_table.inc"

} // namespace

std::vector<SamplePoint> generate_battery(NumericIdentity id, std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed ^ identity_salt(id));
    std::vector<SamplePoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        SamplePoint p;
        const double rho = 0.05 + 0.30 * unit(rng);
        p.q = polar_sample(rng, rho);
        const double r = std::abs(p.q);
        p.x = polar_sample(rng, std::pow(r, 0.25 + 0.5 * unit(rng)));
        p.y = polar_sample(rng, std::pow(r, 0.25 + 0.5 * unit(rng)));
        p.z = polar_sample(rng, std::pow(r, 0.25 + 0.5 * unit(rng)));
        out.push_back(p);
    }
    return out;
}

const std::vector<SamplePoint>& frozen_battery(NumericIdentity id)
{
    static const std::vector<std::vector<SamplePoint>> tables = [] {
        std::vector<std::vector<SamplePoint>> t(5);
        for (const auto& row : kFrozenRows) {
            t[static_cast<std::size_t>(row.id)].push_back(
                SamplePoint{{row.v[0], row.v[1]}, {row.v[2], row.v[3]}, {row.v[4], row.v[5]}, {row.v[6], row.v[7]}});
        }
        return t;
    }();
    const auto idx = static_cast<std::size_t>(id);
    if (idx >= tables.size()) {
        throw std::out_of_range("no battery for identity");
    }
    return tables[idx];
}

BatteryReport run_battery(NumericIdentity id, const EvalContext& base, const std::vector<SamplePoint>& points,
                          unsigned jobs)
{
    base.validate();
    BatteryReport report;
    report.identity = id;
    report.samples.resize(points.size());

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            SampleOutcome& out = report.samples[i];
            out.index = i;
            EvalContext ctx = base;
            ctx.point = points[i];
            try {
                out.results = run_numeric_identity(id, ctx);
                const bool all = std::all_of(out.results.begin(), out.results.end(),
                                             [](const NumericCheckResult& r) { return r.passed; });
                out.status = all ? SampleStatus::passed : SampleStatus::failed;
            } catch (const PoleProximityError& e) {
                out.status = SampleStatus::skipped;
                out.message = e.what();
            } catch (const std::exception& e) {
                out.status = SampleStatus::failed;
                out.message = e.what();
            }
        }
    };

    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) {
            pool.emplace_back(worker);
        }
    }

    for (const auto& s : report.samples) {
        switch (s.status) {
        case SampleStatus::passed:
            ++report.passed;
            break;
        case SampleStatus::failed:
            ++report.failed;
            break;
        case SampleStatus::skipped:
            ++report.skipped;
            break;
        }
        for (const auto& r : s.results) {
            report.max_relative_error = std::max(report.max_relative_error, r.relative_error);
            report.max_certificate = std::max(report.max_certificate, r.certificate);
        }
    }
    return report;
}

} // namespace sumsq::numeric
