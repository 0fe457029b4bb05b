#ifndef MTT_RATIONAL_HPP
#define MTT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "mtt/error.hpp"

namespace mtt {

/// Exact arbitrary-precision rational; every threshold comparison goes through this.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(std::int64_t num, std::int64_t den = 1)
{
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt floor_of(const Rational& r)
{
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r))
        --q;
    return q;
}

inline BigInt ceil_of(const Rational& r)
{
    BigInt f = floor_of(r);
    return f == r ? f : f + 1;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    if (is_integer(r))
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p", "p/q" or a finite decimal such as "0.25" or "-1.5e-2" exactly.
inline Rational parse_rational(const std::string& text)
{
    auto fail = [&] { throw Error(ErrorKind::MalformedInput, "not a rational: '" + text + "'"); };
    if (text.empty())
        fail();
    if (auto slash = text.find('/'); slash != std::string::npos) {
        try {
            BigInt p(text.substr(0, slash));
            BigInt q(text.substr(slash + 1));
            if (q == 0)
                fail();
            return Rational(p, q);
        } catch (const std::runtime_error&) {
            fail();
        }
    }
    std::string mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mantissa = text.substr(0, e);
        try {
            exponent = std::stol(text.substr(e + 1));
        } catch (const std::exception&) {
            fail();
        }
    }
    bool negative = false;
    std::size_t pos = 0;
    if (pos < mantissa.size() && (mantissa[pos] == '-' || mantissa[pos] == '+')) {
        negative = mantissa[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (; pos < mantissa.size(); ++pos) {
        char c = mantissa[pos];
        if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (seen_dot)
                ++frac_digits;
        } else {
            fail();
        }
    }
    if (digits.empty())
        fail();
    BigInt value(digits);
    long shift = exponent - frac_digits;
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
    Rational r = shift < 0 ? Rational(value, scale) : Rational(value * scale);
    return negative ? Rational(-r) : r;
}

} // namespace mtt

#endif
