// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pierce/cylinder.hpp"
#include "pierce/errors.hpp"
#include "pierce/rational.hpp"
#include "pierce/rng.hpp"
#include "pierce/sequence.hpp"

namespace pierce {

/// Digit law for one position: explicit probabilities p_1..p_M plus an
/// optional geometric tail p_{M+j} = p_M * r^j.  Total mass must be exactly
/// one in rational arithmetic; the geometric tail keeps infinite-support
/// laws closed under every operation here (probabilities, tail masses,
/// cumulative sums, sampling).
class DigitDistribution {
public:
    DigitDistribution(std::vector<Rational> head, std::optional<Rational> tail_ratio)
        : head_(std::move(head)), tail_ratio_(std::move(tail_ratio)) {
        if (head_.empty()) throw ValidationError("digit distribution needs at least one entry");
        Rational total = 0;
        for (const Rational& p : head_) {
            if (p < 0 || p > 1) throw ValidationError("digit probability outside [0,1]");
            total += p;
        }
        if (tail_ratio_) {
            if (*tail_ratio_ <= 0 || *tail_ratio_ >= 1)
                throw ValidationError("geometric tail ratio must lie in (0,1)");
            if (head_.back() <= 0)
                throw ValidationError("geometric tail needs a positive last explicit entry");
            total += head_.back() * *tail_ratio_ / (1 - *tail_ratio_);
        }
        if (total != 1) throw ValidationError("digit probabilities must sum to exactly 1");
        cumulative_.reserve(head_.size());
        Rational run = 0;
        for (const Rational& p : head_) {
            run += p;
            cumulative_.push_back(run);
        }
    }

    // "p1 p2 ... pM [geom:r]", entries as exact rationals
    static DigitDistribution parse(std::string_view line) {
        std::istringstream in{std::string(line)};
        std::vector<Rational> head;
        std::optional<Rational> ratio;
        std::string tok;
        while (in >> tok) {
            if (tok.rfind("geom:", 0) == 0) {
                ratio = parse_rational(std::string_view(tok).substr(5));
                if (in >> tok) throw ValidationError("geom:r must be the last token in a row");
                break;
            }
            if (ratio) throw ValidationError("geom:r must be the last token in a row");
            head.push_back(parse_rational(tok));
        }
        return DigitDistribution(std::move(head), std::move(ratio));
    }

    std::size_t explicit_digits() const { return head_.size(); }
    bool has_tail() const { return tail_ratio_.has_value(); }

    Rational probability(const BigInt& digit) const {
        if (digit < 1) throw ValidationError("digits start at 1");
        if (digit <= BigInt(head_.size())) return head_[digit.convert_to<std::size_t>() - 1];
        if (!tail_ratio_) return 0;
        BigInt j = digit - BigInt(head_.size());  // p_M * r^j
        std::uint64_t ju = j.convert_to<std::uint64_t>();
        return head_.back() * make_rational(ipow(numerator(*tail_ratio_), ju),
                                            ipow(denominator(*tail_ratio_), ju));
    }

    // P(X > cutoff), exact
    Rational tail_mass_above(const BigInt& cutoff) const {
        if (cutoff < 0) return 1;
        if (cutoff < BigInt(head_.size())) {
            Rational below = cutoff == 0 ? Rational(0)
                                         : cumulative_[cutoff.convert_to<std::size_t>() - 1];
            return 1 - below;
        }
        if (!tail_ratio_) return 0;
        // sum_{j > cutoff - M} p_M r^j = p_M r^{cutoff-M+1} / (1-r)
        std::uint64_t e = (cutoff - BigInt(head_.size()) + 1).convert_to<std::uint64_t>();
        Rational r_pow = make_rational(ipow(numerator(*tail_ratio_), e),
                                       ipow(denominator(*tail_ratio_), e));
        return head_.back() * r_pow / (1 - *tail_ratio_);
    }

    Rational cdf(const BigInt& digit) const { return 1 - tail_mass_above(digit); }

    // the tail decays geometrically from p_M, so the maximum is in the head
    Rational max_probability() const {
        Rational best = 0;
        for (const Rational& p : head_)
            if (p > best) best = p;
        return best;
    }

    bool finite_support() const { return !tail_ratio_; }

    BigInt support_max() const {
        if (tail_ratio_) throw ValidationError("support_max of an infinite-support law");
        for (std::size_t i = head_.size(); i > 0; --i)
            if (head_[i - 1] > 0) return BigInt(i);
        return 0;
    }

    /// Exact inverse-CDF draw: refine a dyadic interval [a/2^t, (a+1)/2^t)
    /// one random bit at a time until it fits inside a single CDF cell
    /// [cdf(m-1), cdf(m)).  Each digit lands with exactly its configured
    /// probability, and expected bit use is a small constant.
    BigInt sample(BitSource& bits) const {
        BigInt a = 0;
        unsigned t = 0;
        BigInt m = 1;
        Rational cell_lo = 0;
        Rational cell_hi = cdf(m);
        while (true) {
            BigInt pow2 = BigInt(1) << t;
            Rational lo = make_rational(a, pow2);
            Rational hi = make_rational(a + 1, pow2);
            if (lo >= cell_hi) {
                ++m;
                cell_lo = cell_hi;
                cell_hi = cdf(m);
                continue;
            }
            if (lo >= cell_lo && hi <= cell_hi) return m;
            if (t > 4096)
                throw std::logic_error("digit sampling failed to resolve after 4096 bits");
            a <<= 1;
            if (bits.next_bit()) ++a;
            ++t;
        }
    }

private:
    std::vector<Rational> head_;
    std::optional<Rational> tail_ratio_;
    std::vector<Rational> cumulative_;
};

/// Per-position digit laws.  With a stationary tail the last row repeats
/// forever (the file format always produces this); a horizon matrix makes
/// no claim beyond its explicit rows, which matters for purity verdicts.
class StochasticMatrix {
public:
    enum class Tail { Stationary, Horizon };

    explicit StochasticMatrix(std::vector<DigitDistribution> rows,
                              Tail tail = Tail::Stationary)
        : rows_(std::move(rows)), tail_(tail) {
        if (rows_.empty()) throw ValidationError("stochastic matrix needs at least one row");
    }

    static StochasticMatrix iid(DigitDistribution row) {
        return StochasticMatrix({std::move(row)}, Tail::Stationary);
    }

    static StochasticMatrix parse_text(std::string_view text) {
        std::vector<DigitDistribution> rows;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            rows.push_back(DigitDistribution::parse(line));
        }
        if (rows.empty()) throw ValidationError("matrix file has no rows");
        return StochasticMatrix(std::move(rows));
    }

    static StochasticMatrix parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open matrix file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_text(buf.str());
    }

    // 1-based row access
    const DigitDistribution& row(std::uint64_t k) const {
        if (k == 0) throw ValidationError("rows are 1-based");
        if (k <= rows_.size()) return rows_[k - 1];
        if (tail_ == Tail::Stationary) return rows_.back();
        throw ValidationError("row beyond the horizon of a non-stationary matrix");
    }

    std::size_t explicit_rows() const { return rows_.size(); }
    bool stationary() const { return tail_ == Tail::Stationary; }

private:
    std::vector<DigitDistribution> rows_;
    Tail tail_;
};

struct SeriesSample {
    GSequence digits;
    Cylinder cell;  // encloses the realized series value
};

/// Draws the first `depth` digits of a random alternating series with
/// independent digits, row k governing digit k, and returns them with the
/// enclosing cylinder.  Entirely determined by the generator state.
inline SeriesSample sample_series(const StochasticMatrix& matrix, std::uint64_t depth,
                                  SplitMix64 stream) {
    if (depth == 0) throw ValidationError("sample_series: depth must be >= 1");
    BitSource bits(stream);
    std::vector<BigInt> digits;
    digits.reserve(depth);
    for (std::uint64_t k = 1; k <= depth; ++k) digits.push_back(matrix.row(k).sample(bits));
    GSequence g(std::move(digits));
    Cylinder cell = cylinder(g);
    return SeriesSample{std::move(g), std::move(cell)};
}

// --- purity of the digit law ----------------------------------------------

enum class PurityClass { Discrete, SingularContinuous, Undetermined };

/// Verdict on the law of the random series, with the exact partial product
/// prod_{k<=K} max_i p_{ik} as witness.  The law is purely atomic iff the
/// full product stays positive; a stationary tail row decides this exactly
/// (max < 1 drives the product to zero and its positive entries recur
/// forever, forcing a singular continuous law; max = 1 pins every tail
/// digit and leaves a discrete law).  A horizon matrix stays undetermined.
struct PurityVerdict {
    PurityClass purity = PurityClass::Undetermined;
    bool degenerate = false;  // every digit is deterministic
    Rational partial_product; // prod_{k<=K} max_i p_{ik}
    std::uint64_t horizon = 0;
    Rational tail_row_max;    // meaningful when decisive
    bool decisive = false;
};

inline PurityVerdict discreteness_criterion(const StochasticMatrix& matrix, std::uint64_t K) {
    if (K == 0) throw ValidationError("discreteness_criterion: horizon must be >= 1");
    if (!matrix.stationary() && K > matrix.explicit_rows())
        throw ValidationError("discreteness_criterion: horizon exceeds matrix rows");

    PurityVerdict v;
    v.horizon = K;
    v.partial_product = 1;
    for (std::uint64_t k = 1; k <= K; ++k) v.partial_product *= matrix.row(k).max_probability();

    if (!matrix.stationary()) return v;  // undetermined, witness only

    v.decisive = true;
    std::uint64_t rows = matrix.explicit_rows();
    v.tail_row_max = matrix.row(rows).max_probability();
    if (v.tail_row_max == 1) {
        v.purity = PurityClass::Discrete;
        v.degenerate = true;
        for (std::uint64_t k = 1; k <= rows; ++k)
            if (matrix.row(k).max_probability() != 1) v.degenerate = false;
    } else {
        v.purity = PurityClass::SingularContinuous;
    }
    return v;
}

/// Residual of the shift-invariance identity on one cylinder for an iid
/// digit law: |mu(prefix) - sum_{i<=C} mu(i ++ prefix)|, computed literally.
/// Equals mu(prefix) times the digit mass beyond C, so it vanishes once the
/// cutoff covers the support.
inline Rational invariance_residual(const DigitDistribution& p, const GSequence& prefix,
                                    std::uint64_t cutoff) {
    Rational mu = 1;
    for (const BigInt& c : prefix.digits()) mu *= p.probability(c);
    Rational extended = 0;
    for (std::uint64_t i = 1; i <= cutoff; ++i) extended += p.probability(BigInt(i)) * mu;
    Rational residual = mu - extended;
    return residual < 0 ? -residual : residual;
}

}  // namespace pierce
