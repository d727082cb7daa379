#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sumsq {

// Exact rational, always in lowest terms with positive denominator.
using Rat = boost::rational<std::int64_t>;

// "p/q", or plain "p" when the denominator is 1.
std::string to_string(const Rat& r);
// Accepts "p/q" or "p". Returns nullopt on malformed input or zero denominator.
std::optional<Rat> parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

} // namespace sumsq
