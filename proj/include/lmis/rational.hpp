#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lmis {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, kept in lowest terms with a positive denominator.
/// Every coordinate in this library is one of these; no predicate rounds.
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline BigInt floor_to_int(const Rational& x) {
    const BigInt n = numerator(x);
    const BigInt d = denominator(x);
    BigInt q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) {
        --q;
    }
    return q;
}

/// 2^k as an exact rational, k >= 0.
inline Rational pow2(int k) {
    if (k < 0) {
        throw Error("pow2: negative exponent");
    }
    return Rational(BigInt(1) << k);
}

/// Largest k >= 0 with 2^k <= x. Requires x >= 1.
inline int floor_log2(const Rational& x) {
    const BigInt n = numerator(x);
    const BigInt d = denominator(x);
    if (n <= 0 || n < d) {
        throw Error("floor_log2: argument must be >= 1");
    }
    // n >= d > 0, so e >= 0 and 2^(e-1) <= x < 2^(e+1).
    int e = static_cast<int>(msb(n)) - static_cast<int>(msb(d));
    if (e > 0 && pow2(e) > x) {
        --e;
    }
    return e;
}

/// Parses a decimal numeral ("7", "-3.25", "+0.5", ".5") into an exact
/// rational. Throws on anything else, including exponents.
inline Rational parse_decimal(std::string_view s) {
    const auto fail = [&] { throw Error("not a decimal numeral: '" + std::string(s) + "'"); };
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = (s[i] == '-');
        ++i;
    }
    BigInt digits = 0;
    int digit_count = 0;
    int frac_digits = 0;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.') {
            if (seen_point) fail();
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            ++digit_count;
            if (seen_point) ++frac_digits;
        } else {
            fail();
        }
    }
    if (digit_count == 0) fail();
    if (negative) digits = -digits;
    return Rational(digits, boost::multiprecision::pow(BigInt(10), frac_digits));
}

/// Renders x exactly as a finite decimal. Throws when the reduced
/// denominator has prime factors other than 2 and 5.
inline std::string format_decimal(const Rational& x) {
    const BigInt n = numerator(x);
    BigInt d = denominator(x);
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) {
        throw Error("no finite decimal form for " + x.str());
    }
    const int k = std::max(twos, fives);
    const BigInt scale = boost::multiprecision::pow(BigInt(10), k) / denominator(x);
    std::string body = BigInt(abs(n) * scale).str();
    std::string out = (n < 0) ? "-" : "";
    if (k == 0) {
        return out + body;
    }
    if (body.size() <= static_cast<std::size_t>(k)) {
        body.insert(0, static_cast<std::size_t>(k) + 1 - body.size(), '0');
    }
    out += body.substr(0, body.size() - k);
    out += '.';
    out += body.substr(body.size() - k);
    return out;
}

inline double to_double(const Rational& x) {
    return x.convert_to<double>();
}

}  // namespace lmis
