#include "signed_circular/rate.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sc {

CircularRate::CircularRate(std::int64_t p, std::int64_t q)
{
    if (q <= 0 || p <= 0) {
        throw std::invalid_argument("rate components must be positive");
    }
    const auto g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
    if (p_ < 2 * q_) {
        throw std::invalid_argument("circular rate must be at least 2, got " + std::to_string(p) + "/" +
                                    std::to_string(q));
    }
}

std::string CircularRate::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

CircularRate CircularRate::parse(const std::string& text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw std::invalid_argument("invalid rate `" + text + "`");
        }
        return value;
    };
    const std::string_view view(text);
    const auto slash = view.find('/');
    if (slash == std::string_view::npos) {
        return {parse_int(view), 1};
    }
    return {parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1))};
}

ColorGrid::ColorGrid(int p_, int q_) : p(p_), q(q_)
{
    if (q < 1 || p < 2 * q) {
        throw std::invalid_argument("color grid needs q >= 1 and p >= 2q, got " + std::to_string(p) + " " +
                                    std::to_string(q));
    }
}

ColorGrid ColorGrid::for_rate(const CircularRate& rate, bool needs_antipode)
{
    auto p = static_cast<int>(rate.numerator());
    auto q = static_cast<int>(rate.denominator());
    if (needs_antipode && p % 2 != 0) {
        p *= 2;
        q *= 2;
    }
    return {p, q};
}

} // namespace sc
