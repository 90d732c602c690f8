// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "pierce/expansion.hpp"
#include "pierce/rational.hpp"
#include "pierce/sequence.hpp"

namespace pierce {

/// Closed interval of all reals whose first k g-digits equal a given prefix.
/// Its exact length is 1/(sigma_1 sigma_2 ... sigma_k (sigma_k + 1)) with
/// sigma_j = c_1 + ... + c_j.  The depth-k partial sum of the prefix is one
/// endpoint: the right one when k is odd (the next term subtracts), the left
/// one when k is even.  The empty prefix is [0,1] by convention.
struct Cylinder {
    GSequence prefix;
    std::vector<BigInt> sigma;
    Rational left;
    Rational right;
    Rational length;

    bool contains(const Rational& x) const { return left <= x && x <= right; }
    Rational midpoint() const { return (left + right) / 2; }
};

inline Cylinder cylinder(const GSequence& prefix) {
    if (prefix.empty())
        return Cylinder{prefix, {}, Rational(0), Rational(1), Rational(1)};
    std::size_t k = prefix.size();
    std::vector<BigInt> sigma(k);
    BigInt sum = 0;
    BigInt product = 1;
    for (std::size_t i = 0; i < k; ++i) {
        sum += prefix[i];
        sigma[i] = sum;
        product *= sum;
    }
    Rational length = make_rational(1, product * (sum + 1));
    Rational s = evaluate(prefix, k);
    Rational left, right;
    if (k % 2 == 1) {
        right = s;
        left = s - length;
    } else {
        left = s;
        right = s + length;
    }
    return Cylinder{prefix, std::move(sigma), std::move(left), std::move(right),
                    std::move(length)};
}

}  // namespace pierce
