#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sumsq::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

// Inputs read from the process environment. Split out so tests can inject.
struct Environment {
    std::optional<std::string> precision; // SUMSQ_PRECISION

    static Environment from_process();
};

inline constexpr const char* kPrecisionEnv = "SUMSQ_PRECISION";

// Runs one command line (without the program name) and returns its exit code.
// The report goes to `out`; diagnostics and timing go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a..b" inclusive or a single integer. nullopt when malformed or a > b.
std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(const std::string& text);

} // namespace sumsq::cli
