// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pierce/bigint.hpp"
#include "pierce/errors.hpp"

namespace pierce {

namespace detail {

inline std::vector<BigInt> parse_digit_list(std::string_view text) {
    std::vector<BigInt> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw ValidationError("empty digit in sequence");
        for (char c : tok)
            if (c < '0' || c > '9') throw ValidationError("invalid digit character in sequence");
        out.emplace_back(std::string(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string digit_list_str(const std::vector<BigInt>& digits) {
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s += ',';
        s += digits[i].str();
    }
    return s;
}

}  // namespace detail

/// Difference-form digit sequence: every digit >= 1.  `terminated` marks a
/// complete expansion of a rational; such a sequence must be in canonical
/// form, i.e. its last digit is >= 2 (the greedy algorithm never emits a
/// trailing 1, and the trailing-1 twin of a finite expansion is rejected).
class GSequence {
public:
    GSequence() = default;

    explicit GSequence(std::vector<BigInt> digits, bool terminated = false)
        : digits_(std::move(digits)), terminated_(terminated) {
        for (const BigInt& g : digits_)
            if (g < 1) throw ValidationError("g-digit < 1");
        if (terminated_) {
            if (digits_.empty()) throw ValidationError("terminated sequence must be non-empty");
            if (digits_.back() == 1)
                throw ValidationError(
                    "terminated sequence ends in 1: non-canonical representation");
        }
    }

    static GSequence parse(std::string_view text, bool terminated = false) {
        return GSequence(detail::parse_digit_list(text), terminated);
    }

    const std::vector<BigInt>& digits() const { return digits_; }
    const BigInt& operator[](std::size_t i) const { return digits_[i]; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    bool terminated() const { return terminated_; }

    std::string str() const { return detail::digit_list_str(digits_); }

    bool operator==(const GSequence& other) const = default;

private:
    std::vector<BigInt> digits_;
    bool terminated_ = false;
};

/// Original-form digit sequence: strictly increasing positive integers.
class QSequence {
public:
    QSequence() = default;

    explicit QSequence(std::vector<BigInt> digits, bool terminated = false)
        : digits_(std::move(digits)), terminated_(terminated) {
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            if (digits_[i] < 1) throw ValidationError("q-digit < 1");
            if (i > 0 && digits_[i] <= digits_[i - 1])
                throw ValidationError("q-digits must be strictly increasing");
        }
        if (terminated_ && digits_.empty())
            throw ValidationError("terminated sequence must be non-empty");
    }

    static QSequence parse(std::string_view text, bool terminated = false) {
        return QSequence(detail::parse_digit_list(text), terminated);
    }

    const std::vector<BigInt>& digits() const { return digits_; }
    const BigInt& operator[](std::size_t i) const { return digits_[i]; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    bool terminated() const { return terminated_; }

    std::string str() const { return detail::digit_list_str(digits_); }

    bool operator==(const QSequence& other) const = default;

private:
    std::vector<BigInt> digits_;
    bool terminated_ = false;
};

// q_n = g_1 + ... + g_n
inline QSequence q_from_g(const GSequence& g) {
    std::vector<BigInt> q;
    q.reserve(g.size());
    BigInt sum = 0;
    for (const BigInt& d : g.digits()) {
        sum += d;
        q.push_back(sum);
    }
    return QSequence(std::move(q), g.terminated());
}

// g_1 = q_1, g_{n+1} = q_{n+1} - q_n
inline GSequence g_from_q(const QSequence& q) {
    std::vector<BigInt> g;
    g.reserve(q.size());
    BigInt prev = 0;
    for (const BigInt& d : q.digits()) {
        g.push_back(d - prev);
        prev = d;
    }
    return GSequence(std::move(g), q.terminated());
}

}  // namespace pierce
