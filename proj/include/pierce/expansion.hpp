// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pierce/errors.hpp"
#include "pierce/rational.hpp"
#include "pierce/sequence.hpp"

namespace pierce {

struct ExpansionPrefix {
    GSequence digits;
    bool complete;  // true when the expansion terminated within the digit budget
};

/// Greedy expansion of x = p/q in (0,1).  With x_0 = x, each step takes the
/// q-digit a_n = floor(1/x_{n-1}) and continues with x_n = 1 - a_n * x_{n-1};
/// the iteration stops when the remainder hits exactly zero.  Over a fixed
/// denominator q this is pure integer arithmetic: the numerator sequence is
/// p, q mod p, q mod (q mod p), ... and strictly decreases, so every
/// rational terminates.  Round-trips against the series evaluator are the
/// correctness oracle for this procedure.
inline ExpansionPrefix expand_prefix(const Rational& x, std::uint64_t max_digits) {
    if (!in_open_unit(x)) throw ValidationError("expansion requires 0 < x < 1");
    BigInt num = numerator(x);
    const BigInt den = denominator(x);
    std::vector<BigInt> g;
    BigInt prev_q = 0;
    while (num != 0 && g.size() < max_digits) {
        BigInt a = den / num;  // floor(1/x_{n-1}); denominators are fixed
        g.push_back(a - prev_q);
        prev_q = a;
        num = den - a * num;
    }
    return ExpansionPrefix{GSequence(std::move(g), num == 0), num == 0};
}

inline GSequence encode(const Rational& x) {
    return expand_prefix(x, std::numeric_limits<std::uint64_t>::max()).digits;
}

/// Exact partial sum of the alternating series
///   1/g_1 - 1/(g_1(g_1+g_2)) + ... +- 1/(sigma_1 sigma_2 ... sigma_depth)
/// via the backward recurrence R_k = (1 - R_{k+1}) / sigma_k, which keeps
/// everything in integers until a single final reduction.
inline Rational evaluate(const GSequence& g, std::size_t depth) {
    if (depth == 0) throw ValidationError("evaluate: depth must be >= 1");
    if (depth > g.size()) throw ValidationError("evaluate: depth exceeds digit count");
    std::vector<BigInt> sigma(depth);
    BigInt sum = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        sum += g[i];
        sigma[i] = sum;
    }
    BigInt num = 0, den = 1;
    for (std::size_t k = depth; k >= 1; --k) {
        num = den - num;
        den *= sigma[k - 1];
    }
    return make_rational(num, den);
}

inline Rational evaluate(const GSequence& g) {
    if (g.empty()) throw ValidationError("evaluate: empty sequence");
    return evaluate(g, g.size());
}

inline std::vector<Rational> partial_sums(const GSequence& g, std::size_t depth) {
    if (depth > g.size()) throw ValidationError("partial_sums: depth exceeds digit count");
    std::vector<Rational> sums;
    sums.reserve(depth);
    BigInt sigma_product = 1;
    BigInt sigma = 0;
    Rational s = 0;
    for (std::size_t k = 0; k < depth; ++k) {
        sigma += g[k];
        sigma_product *= sigma;
        Rational term = make_rational(1, sigma_product);
        s += (k % 2 == 0) ? term : -term;
        sums.push_back(s);
    }
    return sums;
}

/// One-sided shift: drops the first digit.  A terminated single-digit
/// sequence has nowhere to go (the orbit ends on a rational), signalled by
/// an empty optional.
inline std::optional<GSequence> shift(const GSequence& g) {
    if (g.size() >= 2)
        return GSequence(std::vector<BigInt>(g.digits().begin() + 1, g.digits().end()),
                         g.terminated());
    if (g.size() == 1 && g.terminated()) return std::nullopt;
    throw ValidationError("shift: need at least 2 digits (or a terminated expansion)");
}

}  // namespace pierce
