#include "happycol/fraction.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "happycol/errors.hpp"

namespace happycol {

namespace {

[[noreturn]] void bad(std::string_view text) {
    throw ParameterError("not a valid fraction: '" + std::string(text) + "'");
}

} // namespace

Fraction Fraction::of(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) throw ParameterError("fraction requires num >= 0 and den > 0");
    const std::int64_t g = std::gcd(num, den);
    return Fraction(num / g, den / g);
}

Fraction Fraction::parse(std::string_view text) {
    if (text.empty()) bad(text);

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = 0;
        std::int64_t den = 0;
        const char* nb = text.data();
        const char* ne = text.data() + slash;
        const char* db = text.data() + slash + 1;
        const char* de = text.data() + text.size();
        auto rn = std::from_chars(nb, ne, num);
        auto rd = std::from_chars(db, de, den);
        if (rn.ec != std::errc{} || rn.ptr != ne || rd.ec != std::errc{} || rd.ptr != de) bad(text);
        return of(num, den);
    }

    // Decimal, possibly with an exponent: [digits][.digits][e[+-]digits]
    std::size_t i = 0;
    std::int64_t mantissa = 0;
    int frac_digits = 0;
    int exponent = 0;
    bool any_digit = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        if (mantissa > (INT64_MAX - 9) / 10) bad(text);
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            if (mantissa > (INT64_MAX - 9) / 10) bad(text);
            mantissa = mantissa * 10 + (text[i] - '0');
            ++frac_digits;
            any_digit = true;
        }
    }
    if (!any_digit) bad(text);
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) bad(text);
        int ev = 0;
        for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
            ev = ev * 10 + (text[i] - '0');
            if (ev > 18) bad(text);
        }
        exponent = neg ? -ev : ev;
    }
    if (i != text.size()) bad(text);

    // value = mantissa * 10^(exponent - frac_digits)
    int shift = exponent - frac_digits;
    std::int64_t num = mantissa;
    std::int64_t den = 1;
    while (shift > 0) {
        if (num > INT64_MAX / 10) bad(text);
        num *= 10;
        --shift;
    }
    while (shift < 0) {
        if (den > INT64_MAX / 10) bad(text);
        den *= 10;
        ++shift;
    }
    return of(num, den);
}

Fraction Fraction::from_double(double x) {
    if (!std::isfinite(x) || x < 0.0) throw ParameterError("fraction from_double requires a finite non-negative value");
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return parse(std::string_view(buf, res.ptr - buf));
}

std::int64_t Fraction::ceil_mul(std::int64_t factor) const {
    if (factor < 0) throw ParameterError("ceil_mul requires factor >= 0");
    const auto prod = static_cast<__int128>(num_) * factor;
    const auto q = (prod + den_ - 1) / den_;
    return static_cast<std::int64_t>(q);
}

std::string Fraction::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

bool operator<=(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num_) * b.den_ <= static_cast<__int128>(b.num_) * a.den_;
}

} // namespace happycol
