// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>

#include "pierce/expansion.hpp"
#include "pierce/rational.hpp"
#include "pierce/sequence.hpp"

namespace pierce {

/// Occurrence counts of each digit among the first n digits of an expansion.
struct DigitStats {
    std::uint64_t depth = 0;
    std::map<BigInt, std::uint64_t> counts;
    BigInt max_digit = 0;

    std::uint64_t count(const BigInt& digit) const {
        auto it = counts.find(digit);
        return it == counts.end() ? 0 : it->second;
    }

    Rational frequency(const BigInt& digit) const {
        return make_rational(BigInt(count(digit)), BigInt(depth));
    }
};

inline DigitStats digit_stats(const GSequence& g, std::uint64_t depth) {
    if (depth == 0) throw ValidationError("digit_stats: depth must be >= 1");
    if (depth > g.size()) throw DepthExhausted(g.size(), depth);
    DigitStats stats;
    stats.depth = depth;
    for (std::uint64_t i = 0; i < depth; ++i) {
        ++stats.counts[g[i]];
        if (g[i] > stats.max_digit) stats.max_digit = g[i];
    }
    return stats;
}

/// Throws DepthExhausted when the expansion of x terminates early; the
/// exception carries the achieved depth.
inline DigitStats digit_stats(const Rational& x, std::uint64_t depth) {
    ExpansionPrefix p = expand_prefix(x, depth);
    return digit_stats(p.digits, depth);
}

/// Time average (1/n) sum_{j=0}^{n-1} phi(T^j x) of the digit-i indicator
/// along the shift orbit, computed by actually walking the orbit.  Equal to
/// digit_stats(g, n).frequency(i) by construction; the two routes are kept
/// separate so tests can compare them.
inline Rational birkhoff_average(const GSequence& g, const BigInt& digit, std::uint64_t n) {
    if (n == 0) throw ValidationError("birkhoff_average: n must be >= 1");
    if (n > g.size()) throw ValidationError("birkhoff_average: orbit needs at least n digits");
    std::uint64_t hits = 0;
    GSequence cur = g;
    for (std::uint64_t j = 0; j < n; ++j) {
        if (cur[0] == digit) ++hits;
        if (j + 1 < n) {
            auto next = shift(cur);
            if (!next) throw ValidationError("birkhoff_average: orbit terminated");
            cur = *next;
        }
    }
    return make_rational(BigInt(hits), BigInt(n));
}

}  // namespace pierce
