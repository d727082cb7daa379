#pragma once

// Fixed sample batteries for the numeric identities, and a runner that
// evaluates a battery across worker threads.

#include <cstdint>
#include <string>
#include <vector>

#include "sumsq/numeric.hpp"

namespace sumsq::numeric {

inline constexpr std::uint64_t kBatterySeed = 0x5eed2024;
inline constexpr std::size_t kBatterySize = 24;

// Points inside every identity's hypothesis region: |q| in [0.05, 0.35],
// |x|, |y|, |z| = |q|^theta with theta in [0.25, 0.75], arguments uniform.
// Coordinates are rounded to multiples of 2^-16 so the printed table is exact.
std::vector<SamplePoint> generate_battery(NumericIdentity id, std::uint64_t seed, std::size_t count);

// The stored table; equal to generate_battery(id, kBatterySeed, kBatterySize).
const std::vector<SamplePoint>& frozen_battery(NumericIdentity id);

enum class SampleStatus { passed, failed, skipped };

struct SampleOutcome {
    std::size_t index = 0;
    SampleStatus status = SampleStatus::failed;
    std::vector<NumericCheckResult> results;
    std::string message; // reason for a skip
};

struct BatteryReport {
    NumericIdentity identity{};
    std::vector<SampleOutcome> samples; // in point order
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    double max_relative_error = 0.0;
    double max_certificate = 0.0;

    // No failures and at least one evaluated point.
    bool ok() const { return failed == 0 && passed > 0; }
};

// Runs every point with `base`'s precision and tolerance. Samples within the
// pole guard are skipped and reported. Aggregation does not depend on `jobs`.
BatteryReport run_battery(NumericIdentity id, const EvalContext& base, const std::vector<SamplePoint>& points,
                          unsigned jobs = 1);

} // namespace sumsq::numeric
