// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "pierce/bigint.hpp"
#include "pierce/errors.hpp"
#include "pierce/rational.hpp"

namespace pierce {

/// Alpha-volume of the canonical depth-k cover of the bounded-digit set on
/// alphabet {1..n}: the cover consists of n^k cylinders, each of length at
/// most 1/(k!(k+1)), so its alpha-volume is
///
///     V(n, alpha, k) = n^k * (1 / (k!(k+1)))^alpha.
///
/// For rational alpha = p/q every comparison of V against another V or a
/// rational bound reduces to comparing integer powers, so the trend tests
/// are exact even though V itself is irrational for q > 1.  Reported values
/// are directed-rounding enclosures scaled to `precision_digits` decimals.
struct AlphaVolumeBounds {
    Rational lower;
    Rational upper;
    bool exact;  // lower == upper == V
};

namespace detail {

struct AlphaParts {
    BigInt p;
    BigInt q;
};

inline AlphaParts alpha_parts(const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) throw ValidationError("alpha must lie in (0, 1]");
    BigInt q = denominator(alpha);
    if (q > 64) throw ValidationError("alpha denominator above 64 is not supported");
    return {numerator(alpha), q};
}

// W_k = k!(k+1), the reciprocal of the cover mesh
inline BigInt cover_weight(std::uint64_t k) { return factorial(k) * (k + 1); }

}  // namespace detail

inline AlphaVolumeBounds alpha_volume(std::uint64_t alphabet, const Rational& alpha,
                                      std::uint64_t depth, unsigned precision_digits = 30) {
    if (alphabet == 0 || depth == 0)
        throw ValidationError("alpha_volume: alphabet and depth must be >= 1");
    auto [p, q] = detail::alpha_parts(alpha);
    std::uint64_t pu = p.convert_to<std::uint64_t>();
    std::uint64_t qu = q.convert_to<std::uint64_t>();

    BigInt n_pow = ipow(BigInt(alphabet), depth);
    BigInt w_pow = ipow(detail::cover_weight(depth), pu);

    // exact when W^p is a perfect q-th power
    BigInt root = kth_root_floor(w_pow, qu);
    if (ipow(root, qu) == w_pow) {
        Rational v = make_rational(n_pow, root);
        return {v, v, true};
    }
    // directed rounding: r = floor((W^p * 10^{qd})^{1/q}) gives
    // n^k 10^d/(r+1) < V < n^k 10^d/r
    BigInt scale = pow10(precision_digits);
    BigInt r = kth_root_floor(w_pow * ipow(scale, qu), qu);
    return {make_rational(n_pow * scale, r + 1), make_rational(n_pow * scale, r), false};
}

/// Exact sign of V(n, alpha, k1) - V(n, alpha, k2).
inline int alpha_volume_compare(std::uint64_t alphabet, const Rational& alpha, std::uint64_t k1,
                                std::uint64_t k2) {
    if (alphabet == 0 || k1 == 0 || k2 == 0)
        throw ValidationError("alpha_volume_compare: arguments must be >= 1");
    auto [p, q] = detail::alpha_parts(alpha);
    std::uint64_t pu = p.convert_to<std::uint64_t>();
    std::uint64_t qu = q.convert_to<std::uint64_t>();
    // V(k1) <=> V(k2)  iff  n^{k1 q} W_{k2}^p <=> n^{k2 q} W_{k1}^p
    BigInt lhs = ipow(BigInt(alphabet), k1 * qu) * ipow(detail::cover_weight(k2), pu);
    BigInt rhs = ipow(BigInt(alphabet), k2 * qu) * ipow(detail::cover_weight(k1), pu);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

/// Exact sign of V(n, alpha, k) - bound, for a positive rational bound.
inline int alpha_volume_compare_bound(std::uint64_t alphabet, const Rational& alpha,
                                      std::uint64_t depth, const Rational& bound) {
    if (alphabet == 0 || depth == 0)
        throw ValidationError("alpha_volume_compare_bound: arguments must be >= 1");
    if (bound <= 0) throw ValidationError("alpha_volume_compare_bound: bound must be positive");
    auto [p, q] = detail::alpha_parts(alpha);
    std::uint64_t pu = p.convert_to<std::uint64_t>();
    std::uint64_t qu = q.convert_to<std::uint64_t>();
    // n^k / W^{p/q} <=> bn/bd  iff  (n^k bd)^q <=> W^p bn^q
    BigInt lhs = ipow(ipow(BigInt(alphabet), depth) * denominator(bound), qu);
    BigInt rhs = ipow(detail::cover_weight(depth), pu) * ipow(numerator(bound), qu);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

/// Consecutive-volume ratio V(k+1)/V(k) = n / (k+2)^alpha, so the volumes
/// strictly decrease exactly from the smallest k with (k+2)^p > n^q onward.
inline std::uint64_t alpha_volume_decreasing_from(std::uint64_t alphabet, const Rational& alpha) {
    if (alphabet == 0) throw ValidationError("alpha_volume_decreasing_from: alphabet >= 1");
    auto [p, q] = detail::alpha_parts(alpha);
    std::uint64_t pu = p.convert_to<std::uint64_t>();
    std::uint64_t qu = q.convert_to<std::uint64_t>();
    BigInt target = ipow(BigInt(alphabet), qu);
    // smallest t with t^p > n^q, then k = t - 2 (clamped to 1)
    BigInt t = kth_root_floor(target, pu) + 1;
    while (ipow(t - 1, pu) > target) --t;  // guard against root slack
    while (ipow(t, pu) <= target) ++t;
    BigInt k = t - 2;
    if (k < 1) return 1;
    return k.convert_to<std::uint64_t>();
}

}  // namespace pierce
