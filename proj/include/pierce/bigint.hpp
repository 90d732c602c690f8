// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "pierce/errors.hpp"

namespace pierce {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt pow10(std::uint64_t d) { return ipow(BigInt(10), d); }

// floor(x^(1/q)) for x >= 0, q >= 1, by Newton iteration with an
// initial guess from the bit length.
inline BigInt kth_root_floor(const BigInt& x, std::uint64_t q) {
    if (x < 0 || q == 0) throw ValidationError("kth_root_floor: x >= 0, q >= 1 required");
    if (x == 0 || x == 1 || q == 1) return x;
    std::uint64_t bits = msb(x) + 1;
    BigInt r = BigInt(1) << static_cast<unsigned>(bits / q + 1);
    while (true) {
        // r' = ((q-1)r + x / r^{q-1}) / q
        BigInt next = ((q - 1) * r + x / ipow(r, q - 1)) / q;
        if (next >= r) break;
        r = next;
    }
    while (ipow(r, q) > x) --r;
    while (ipow(r + 1, q) <= x) ++r;
    return r;
}

// lcm(1..n) as the product of maximal prime powers <= n.
inline BigInt lcm_upto(std::uint64_t n) {
    if (n < 2) return 1;
    std::vector<bool> composite(n + 1, false);
    BigInt out = 1;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t m = 2 * p; m <= n; m += p) composite[m] = true;
        std::uint64_t pk = p;
        while (pk <= n / p) pk *= p;
        out *= pk;
    }
    return out;
}

}  // namespace pierce
