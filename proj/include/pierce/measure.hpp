// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pierce/bigint.hpp"
#include "pierce/constraint.hpp"
#include "pierce/errors.hpp"
#include "pierce/rational.hpp"

namespace pierce {

/// Two-sided enclosure of a Lebesgue measure.  `lower` is the truncated
/// cylinder sum alone; `upper` adds exact analytic tail bounds for the
/// digits cut off beyond the cutoff.
struct MeasureEstimate {
    Rational lower;
    Rational upper;
    std::uint64_t depth = 0;
    std::uint64_t cutoff = 0;
    bool empty_level = false;
};

// --- telescoping closed forms -------------------------------------------
// These two identities carry every tail bound in this module.  Both are
// verified against plain truncated sums in the test suite.

// sum_{m=s+1}^{inf} 1/(m(m+1)) = 1/(s+1)
inline Rational pair_tail(const BigInt& s) { return make_rational(1, s + 1); }

// sum_{m=s+1}^{s+n} 1/(m(m+1)) = 1/(s+1) - 1/(s+n+1)
inline Rational pair_window(const BigInt& s, const BigInt& n) {
    return make_rational(n, (s + 1) * (s + n + 1));
}

// sum_{m=s+1}^{inf} 1/(m(m+1)(m+2)) = 1/(2(s+1)(s+2))
inline Rational triple_tail(const BigInt& s) { return make_rational(1, 2 * (s + 1) * (s + 2)); }

// sum_{m=s+1}^{s+n} 1/(m(m+1)(m+2)) = 1/(2(s+1)(s+2)) - 1/(2(s+n+1)(s+n+2))
inline Rational triple_window(const BigInt& s, const BigInt& n) {
    return triple_tail(s) - triple_tail(s + n);
}

namespace detail {

// Exact sum of fractions over one fixed denominator.  Every added fraction's
// denominator must divide the fixed one; anything else is a caller bug and
// fails loudly rather than corrupting the total.
class ScaledSum {
public:
    explicit ScaledSum(BigInt den) : den_(std::move(den)) {}

    void add(const BigInt& num, const BigInt& den) {
        BigInt q, r;
        divide_qr(den_, den, q, r);
        if (r != 0) throw std::logic_error("ScaledSum: denominator does not divide scale");
        num_ += num * q;
    }

    // += value_num/value_den scaled by an exact integer factor
    void add_scaled(const BigInt& value_num, const BigInt& factor) { num_ += value_num * factor; }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    Rational value() const { return make_rational(num_, den_); }

private:
    BigInt num_{0};
    BigInt den_;
};

inline std::uint64_t digit_as_u64(const BigInt& digit, const char* what) {
    if (digit < 1 || digit > BigInt(1'000'000'000))
        throw ValidationError(std::string(what) + ": digit out of supported range");
    return digit.convert_to<std::uint64_t>();
}

}  // namespace detail

// --- cover measures for digit-restricted sets ----------------------------

/// Exact measure enclosure of the depth-k cover of the set of reals whose
/// digits obey `constraint` level by level.
///
/// Cylinder lengths depend on the prefix only through its partial sums, so
/// instead of enumerating prefixes this walks a value map keyed by the
/// running digit sum: weight[s] at level j is the exact sum of
/// 1/(sigma_1...sigma_j) over all admissible truncated prefixes with
/// sigma_j = s.  Unbounded levels truncated at the cutoff contribute an
/// exact telescoped tail to `upper` (the digits > cutoff at level j, times
/// the full mass of everything deeper).  Total transition work is capped;
/// exceeding the cap raises ResourceCapError.
inline MeasureEstimate cover_measure(const DigitConstraint& constraint, std::uint64_t depth,
                                     std::uint64_t cutoff, std::uint64_t work_cap = 10'000'000) {
    if (depth == 0) throw ValidationError("cover_measure: depth must be >= 1");
    if (cutoff == 0) throw ValidationError("cover_measure: cutoff must be >= 1");

    MeasureEstimate out;
    out.depth = depth;
    out.cutoff = cutoff;

    for (std::uint64_t k = 1; k <= depth; ++k) {
        const LevelSet& level = constraint.level(k);
        if (level.empty()) {
            out.empty_level = true;
            out.lower = 0;
            out.upper = 0;
            return out;
        }
        if (!level.unbounded() && level.max_finite() > cutoff)
            throw ValidationError("cover_measure: cutoff below a finite level bound");
    }

    const BigInt big_cutoff(cutoff);
    std::map<BigInt, Rational> weights;
    weights[BigInt(0)] = 1;
    Rational tail = 0;
    std::uint64_t work = 0;

    for (std::uint64_t k = 1; k <= depth; ++k) {
        const LevelSet& level = constraint.level(k);
        std::map<BigInt, Rational> next;
        for (const auto& [s, w] : weights) {
            if (level.unbounded()) {
                // exact mass of admissible digits beyond the cutoff, all
                // deeper digits free: sum_{c>t} 1/((s+c)(s+c+1)) = 1/(s+t+1)
                BigInt start = big_cutoff;
                if (level.kind == LevelSet::Kind::Tail && level.bound > start)
                    start = level.bound;
                tail += w * pair_tail(s + start);
            }
            auto push = [&](const BigInt& c) {
                if (++work > work_cap)
                    throw ResourceCapError("cover_measure: work cap exceeded at depth " +
                                           std::to_string(k));
                BigInt sigma = s + c;
                next[sigma] += w / sigma;
            };
            switch (level.kind) {
                case LevelSet::Kind::All:
                    for (BigInt c = 1; c <= big_cutoff; ++c) push(c);
                    break;
                case LevelSet::Kind::Range:
                    for (BigInt c = 1; c <= level.bound; ++c) push(c);
                    break;
                case LevelSet::Kind::Tail:
                    for (BigInt c = level.bound + 1; c <= big_cutoff; ++c) push(c);
                    break;
                case LevelSet::Kind::Explicit:
                    for (const BigInt& c : level.elems) push(c);
                    break;
            }
        }
        weights = std::move(next);
    }

    Rational lower = 0;
    for (const auto& [s, w] : weights) lower += w * pair_tail(s);  // 1/(s+1)
    out.lower = lower;
    out.upper = lower + tail;
    return out;
}

/// Partial sums deciding the measure of Range-constrained covers: the first
/// converging forces positive measure, the second diverging forces measure
/// zero.  `m` must provide terms+1 level bounds.
struct RangeSeriesSums {
    Rational prefix_ratio_sum;  // sum_{k<=K} (m_1+...+m_k)/m_{k+1}
    Rational index_ratio_sum;   // sum_{k<=K} k/m_k
};

inline RangeSeriesSums range_series_sums(const std::vector<BigInt>& m, std::uint64_t terms) {
    if (terms == 0) throw ValidationError("range_series_sums: need at least one term");
    if (m.size() < terms + 1)
        throw ValidationError("range_series_sums: need terms+1 level bounds");
    for (const BigInt& v : m)
        if (v < 1) throw ValidationError("range_series_sums: bounds must be >= 1");
    RangeSeriesSums out;
    out.prefix_ratio_sum = 0;
    out.index_ratio_sum = 0;
    BigInt prefix = 0;
    for (std::uint64_t k = 1; k <= terms; ++k) {
        prefix += m[k - 1];
        out.prefix_ratio_sum += make_rational(prefix, m[k]);
        out.index_ratio_sum += make_rational(BigInt(k), m[k - 1]);
    }
    return out;
}

// --- mass of {x : g_k(x) = i} ---------------------------------------------

namespace detail {

// Truncated mass of the digit-i-at-position-k set with every free digit
// <= C, i.e. the exact sum over (c_1 .. c_{k-1}) in [1..C]^{k-1} of
//   1/(sigma_1 ... sigma_{k-1} (sigma_{k-1}+i) (sigma_{k-1}+i+1)).
// Inner sums are collapsed by the telescoping closed forms, the remaining
// level runs as a sliding window, and everything accumulates over one
// fixed denominator, so the result is exact.
inline Rational truncated_position_mass(std::uint64_t i, std::uint64_t k, std::uint64_t C) {
    if (C == 0) throw ValidationError("truncated mass: cutoff must be >= 1");
    if (C + i > 200'000)
        throw ResourceCapError("truncated mass: cutoff + digit too large for exact mode");

    const BigInt bi(i);
    if (k == 1) return make_rational(1, bi * (bi + 1));  // single cylinder, no free digits

    if (k == 2) {
        // sum_{u<=C} 1/(u(u+i)(u+i+1))
        ScaledSum sum(ipow(lcm_upto(C + i + 1), 3));
        for (std::uint64_t u = 1; u <= C; ++u) {
            BigInt bu(u);
            sum.add(1, bu * (bu + i) * (bu + i + 1));
        }
        return sum.value();
    }

    if (k == 3) {
        // sum_{u<=C} (1/u) * W(u),  W(u) = sum_{v=u+1}^{u+C} 1/(v(v+i)(v+i+1))
        ScaledSum window(ipow(lcm_upto(2 * C + i + 1), 3));
        auto term_den = [&](std::uint64_t v) -> BigInt {
            BigInt bv(v);
            return bv * (bv + i) * (bv + i + 1);
        };
        for (std::uint64_t v = 2; v <= C + 1; ++v) window.add(1, term_den(v));
        const BigInt L = lcm_upto(C);
        ScaledSum total(window.den() * L);
        for (std::uint64_t u = 1; u <= C; ++u) {
            total.add_scaled(window.num(), L / u);
            if (u < C) {
                window.add(-1, term_den(u + 1));
                window.add(1, term_den(u + C + 1));
            }
        }
        return total.value();
    }

    if (k == 4 && i == 1) {
        // sum_{u<=C} (1/u) * M(u),  M(u) = sum_{v=u+1}^{u+C} T(v)/v with the
        // third level already telescoped: T(v) = sum_{w=v+1}^{v+C} 1/(w(w+1)(w+2))
        ScaledSum window(2 * ipow(lcm_upto(3 * C + 3), 3));
        auto add_term = [&](std::uint64_t v, int sign) {
            BigInt bv(v);
            // T(v)/v = 1/(2v(v+1)(v+2)) - 1/(2v(v+C+1)(v+C+2))
            window.add(sign, 2 * bv * (bv + 1) * (bv + 2));
            window.add(-sign, 2 * bv * (bv + C + 1) * (bv + C + 2));
        };
        for (std::uint64_t v = 2; v <= C + 1; ++v) add_term(v, 1);
        const BigInt L = lcm_upto(C);
        ScaledSum total(window.den() * L);
        for (std::uint64_t u = 1; u <= C; ++u) {
            total.add_scaled(window.num(), L / u);
            if (u < C) {
                add_term(u + 1, -1);
                add_term(u + C + 1, 1);
            }
        }
        return total.value();
    }

    throw ValidationError(
        "truncated mass: supported depths are k <= 3 (any digit) and k = 4 (digit 1)");
}

}  // namespace detail

/// Measure of the set of reals whose k-th g-digit equals i.
///
/// Without a cutoff this returns the exact closed forms: 1/(i(i+1)) at
/// position 1 (a single cylinder) and 1/2^k for digit 1 (iterated
/// telescoping of the triple product sums).  With a cutoff it returns the
/// truncated sum as `lower` and adds the exact truncation gap of the
/// digit-1 set, which dominates the gap for every digit, to form `upper`.
inline MeasureEstimate digit_position_mass(const BigInt& digit, std::uint64_t position,
                                           std::optional<std::uint64_t> cutoff = std::nullopt) {
    if (digit < 1) throw ValidationError("digit_position_mass: digit must be >= 1");
    if (position == 0) throw ValidationError("digit_position_mass: position must be >= 1");

    MeasureEstimate out;
    out.depth = position;

    if (!cutoff) {
        Rational exact;
        if (position == 1)
            exact = make_rational(1, digit * (digit + 1));
        else if (digit == 1)
            exact = make_rational(1, BigInt(1) << static_cast<unsigned>(position));
        else
            throw ValidationError(
                "digit_position_mass: no exact closed form for digit >= 2 at position >= 2; "
                "pass a cutoff for a truncated enclosure");
        out.lower = exact;
        out.upper = exact;
        return out;
    }

    out.cutoff = *cutoff;
    std::uint64_t i = detail::digit_as_u64(digit, "digit_position_mass");
    out.lower = detail::truncated_position_mass(i, position, *cutoff);
    if (position == 1 || i == 1) {
        // exact value known; the tail is exactly the truncation gap
        Rational exact = position == 1 ? make_rational(1, digit * (digit + 1))
                                       : make_rational(1, BigInt(1) << static_cast<unsigned>(position));
        out.upper = exact;
    } else {
        Rational one_lower = detail::truncated_position_mass(1, position, *cutoff);
        Rational one_exact = make_rational(1, BigInt(1) << static_cast<unsigned>(position));
        out.upper = out.lower + (one_exact - one_lower);
    }
    return out;
}

/// Exact sum of the lengths of all depth-k cylinders whose digits are all
/// <= C: the truncated partition mass, tending to 1 as C grows.  Same
/// sliding-window machinery as the position masses; supports k <= 3.
inline Rational truncated_partition_mass(std::uint64_t k, std::uint64_t C) {
    if (k == 0 || C == 0) throw ValidationError("truncated_partition_mass: k, C >= 1");
    if (C > 200'000) throw ResourceCapError("truncated_partition_mass: cutoff too large");

    if (k == 1) return pair_window(0, C);

    if (k == 2) {
        // sum_{u<=C} (1/u) (1/(u+1) - 1/(u+C+1))
        detail::ScaledSum sum(ipow(lcm_upto(2 * C + 1), 2));
        for (std::uint64_t u = 1; u <= C; ++u) {
            BigInt bu(u);
            sum.add(1, bu * (bu + 1));
            sum.add(-1, bu * (bu + C + 1));
        }
        return sum.value();
    }

    if (k == 3) {
        // sum_{u<=C} (1/u) W(u),  W(u) = sum_{v=u+1}^{u+C} (1/(v(v+1)) - 1/(v(v+C+1)))
        detail::ScaledSum window(ipow(lcm_upto(3 * C + 1), 2));
        auto add_term = [&](std::uint64_t v, int sign) {
            BigInt bv(v);
            window.add(sign, bv * (bv + 1));
            window.add(-sign, bv * (bv + C + 1));
        };
        for (std::uint64_t v = 2; v <= C + 1; ++v) add_term(v, 1);
        const BigInt L = lcm_upto(C);
        detail::ScaledSum total(window.den() * L);
        for (std::uint64_t u = 1; u <= C; ++u) {
            total.add_scaled(window.num(), L / u);
            if (u < C) {
                add_term(u + 1, -1);
                add_term(u + C + 1, 1);
            }
        }
        return total.value();
    }

    throw ValidationError("truncated_partition_mass: supported depths are k <= 3");
}

}  // namespace pierce
