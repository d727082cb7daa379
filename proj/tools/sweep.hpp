#pragma once

// Parallel sweep over an integer range. Workers pull fixed-size chunks off a
// shared counter; each keeps local tallies that are merged at the end, so the
// outcome does not depend on the thread count or scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace sumsq::cli {

struct CaseResult {
    enum class Kind { pass, skip, fail };
    Kind kind = Kind::pass;
    std::string detail;

    static CaseResult pass() { return {Kind::pass, {}}; }
    static CaseResult skip() { return {Kind::skip, {}}; }
    static CaseResult fail(std::string why) { return {Kind::fail, std::move(why)}; }
    static CaseResult check(bool ok, std::string why) { return ok ? pass() : fail(std::move(why)); }
};

struct SweepOutcome {
    std::int64_t checked = 0;
    std::int64_t skipped = 0;
    std::int64_t failures = 0;
    // Smallest failing n with its detail.
    std::optional<std::pair<std::int64_t, std::string>> first_failure;

    bool ok() const { return failures == 0; }

    void merge(const SweepOutcome& other)
    {
        checked += other.checked;
        skipped += other.skipped;
        failures += other.failures;
        if (other.first_failure && (!first_failure || other.first_failure->first < first_failure->first)) {
            first_failure = other.first_failure;
        }
    }
};

template <class Check>
SweepOutcome sweep(std::int64_t from, std::int64_t to, unsigned jobs, Check check)
{
    constexpr std::int64_t kChunk = 32;
    std::atomic<std::int64_t> next{from};
    std::mutex merge_mutex;
    SweepOutcome total;

    const auto worker = [&] {
        SweepOutcome local;
        for (;;) {
            const std::int64_t start = next.fetch_add(kChunk);
            if (start > to) {
                break;
            }
            const std::int64_t stop = std::min(to, start + kChunk - 1);
            for (std::int64_t n = start; n <= stop; ++n) {
                CaseResult r;
                try {
                    r = check(n);
                } catch (const std::exception& e) {
                    r = CaseResult::fail(e.what());
                }
                switch (r.kind) {
                case CaseResult::Kind::skip:
                    ++local.skipped;
                    break;
                case CaseResult::Kind::pass:
                    ++local.checked;
                    break;
                case CaseResult::Kind::fail:
                    ++local.checked;
                    ++local.failures;
                    if (!local.first_failure || n < local.first_failure->first) {
                        local.first_failure.emplace(n, std::move(r.detail));
                    }
                    break;
                }
            }
        }
        std::lock_guard lock(merge_mutex);
        total.merge(local);
    };

    if (from > to) {
        return total;
    }
    const std::int64_t span = to - from + 1;
    const unsigned n = static_cast<unsigned>(std::clamp<std::int64_t>(jobs, 1, std::max<std::int64_t>(1, span / kChunk)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) {
            pool.emplace_back(worker);
        }
    }
    return total;
}

} // namespace sumsq::cli
