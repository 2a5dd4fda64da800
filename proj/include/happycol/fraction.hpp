#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace happycol {

/// Exact non-negative rational, used for the happiness proportion rho.
///
/// Happiness thresholds compare an integer neighbour count against
/// ceil(rho * deg); doing that in floating point misbehaves exactly at the
/// boundaries where rho * deg is an integer. Fraction keeps rho as num/den
/// and evaluates the ceiling in integer arithmetic.
class Fraction {
public:
    Fraction() = default;

    /// Reduced fraction num/den, den > 0.
    static Fraction of(std::int64_t num, std::int64_t den);

    /// Parses "0.35", ".5", "1", "7/20" or scientific notation like "3.5e-1".
    static Fraction parse(std::string_view text);

    /// Exact value of the shortest decimal literal that round-trips to x,
    /// so 0.35 becomes 35/100 rather than the nearest binary double.
    static Fraction from_double(double x);

    /// ceil(value * factor) for factor >= 0, computed exactly.
    std::int64_t ceil_mul(std::int64_t factor) const;

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    std::string str() const;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Fraction& a, const Fraction& b);
    friend bool operator<=(const Fraction& a, const Fraction& b);

private:
    Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace happycol
