#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sc {

/// Exact circumference p/q >= 2, always stored in lowest terms.
class CircularRate {
public:
    CircularRate(std::int64_t p, std::int64_t q);

    std::int64_t numerator() const noexcept { return p_; }
    std::int64_t denominator() const noexcept { return q_; }

    CircularRate scaled(std::int64_t factor) const { return {p_ * factor, q_}; }

    /// "p/q", never decimal.
    std::string str() const;

    /// Parses "p/q" or "p".
    static CircularRate parse(const std::string& text);

    friend bool operator==(const CircularRate&, const CircularRate&) = default;
    friend std::strong_ordering operator<=>(const CircularRate& a, const CircularRate& b)
    {
        return a.p_ * b.q_ <=> b.p_ * a.q_;
    }

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// Discretization of the circle C^{p/q}: colors are integers mod p standing
/// for the points i/q. Unlike CircularRate, (p, q) need not be coprime; a
/// signed graph with negative edges needs p even so that the antipode i + p/2
/// is a grid point.
struct ColorGrid {
    int p = 2;
    int q = 1;

    ColorGrid() = default;
    ColorGrid(int p_, int q_);

    CircularRate rate() const { return {p, q}; }
    bool has_antipode() const noexcept { return p % 2 == 0; }

    /// Lowest-terms grid for `rate`, doubled when `needs_antipode` and the
    /// numerator is odd.
    static ColorGrid for_rate(const CircularRate& rate, bool needs_antipode);

    bool operator==(const ColorGrid&) const = default;
};

} // namespace sc
