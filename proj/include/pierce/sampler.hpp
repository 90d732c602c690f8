// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "pierce/errors.hpp"
#include "pierce/rational.hpp"
#include "pierce/rng.hpp"

namespace pierce {

/// Draws dyadic rationals p/2^B with p uniform on {1, ..., 2^B - 1}, as an
/// exact stand-in for Lebesgue-random reals.  Sample i always comes from
/// substream(seed, i), so the sequence is reproducible and order-free.
class UniformSampler {
public:
    UniformSampler(std::uint64_t seed, std::uint64_t bits) : seed_(seed), bits_(bits) {
        if (bits_ == 0) throw ValidationError("UniformSampler: bit budget must be >= 1");
    }

    Rational sample(std::uint64_t index) const {
        SplitMix64 gen = substream(seed_, index);
        BigInt p = random_bits(gen, bits_);
        while (p == 0) p = random_bits(gen, bits_);  // zero is excluded, redraw
        return make_rational(p, BigInt(1) << static_cast<unsigned>(bits_));
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t bits() const { return bits_; }

private:
    std::uint64_t seed_;
    std::uint64_t bits_;
};

}  // namespace pierce
