#include "sumsq/rational.hpp"

#include <charconv>

namespace sumsq {

std::string to_string(const Rat& r)
{
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s)
{
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) {
        return std::nullopt;
    }
    return v;
}

} // namespace

std::optional<Rat> parse_rat(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = parse_int(text.substr(0, slash));
    if (!num) {
        return std::nullopt;
    }
    if (slash == std::string_view::npos) {
        return Rat(*num);
    }
    const auto den = parse_int(text.substr(slash + 1));
    if (!den || *den == 0) {
        return std::nullopt;
    }
    return Rat(*num, *den);
}

} // namespace sumsq
