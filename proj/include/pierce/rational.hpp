// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pierce/bigint.hpp"
#include "pierce/errors.hpp"

namespace pierce {

// Exact fraction, always stored in lowest terms with positive denominator.
// cpp_rational canonicalizes on every operation, which is exactly the
// invariant the rest of the library relies on for equality tests.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0) return Rational(-num, -den);  // cpp_rational requires den > 0
    return Rational(num, den);
}

// "p/q" or a bare integer "p".  Whitespace is not tolerated.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw ValidationError("empty integer in rational");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw ValidationError("sign without digits in rational");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ValidationError("invalid character in rational: '" + std::string(s) + "'");
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    return make_rational(num, den);
}

// Canonical "numerator/denominator" form, denominator always present.
inline std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Decimal expansion truncated toward zero, for human-readable report
// fields.  Deterministic: never routed through floating point.
inline std::string decimal_str(const Rational& r, unsigned digits = 12) {
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    bool neg = n < 0;
    if (neg) n = -n;
    BigInt scaled = n * pow10(digits) / d;
    std::string s = scaled.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

inline bool in_open_unit(const Rational& r) { return r > 0 && r < 1; }

}  // namespace pierce
