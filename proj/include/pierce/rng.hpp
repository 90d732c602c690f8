// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "pierce/bigint.hpp"

namespace pierce {

/// SplitMix64 (Steele, Lea, Flood 2014): additive counter with a 64-bit
/// finalizer.  Chosen because the whole algorithm fits in a dozen lines,
/// so runs are reproducible from the documented seed alone, and because
/// substreams derive cleanly from (seed, index) pairs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

private:
    std::uint64_t state_;
};

/// Per-sample stream for parallel experiments: state is a fixed mix of the
/// run seed and the sample index, so any worker can draw sample i without
/// coordination and the result is independent of scheduling.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(SplitMix64::mix(seed) ^ SplitMix64::mix(0x9E3779B97F4A7C15ULL * (index + 1)));
}

/// MSB-first bit reader over a SplitMix64 word stream.
class BitSource {
public:
    explicit BitSource(SplitMix64 gen) : gen_(gen) {}

    bool next_bit() {
        if (left_ == 0) {
            word_ = gen_.next();
            left_ = 64;
        }
        --left_;
        return (word_ >> left_) & 1u;
    }

private:
    SplitMix64 gen_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

/// `bits` uniform random bits assembled into an integer, MSB first.
inline BigInt random_bits(SplitMix64& gen, std::uint64_t bits) {
    BigInt out = 0;
    std::uint64_t full = bits / 64, rest = bits % 64;
    for (std::uint64_t i = 0; i < full; ++i) {
        out <<= 64;
        out += gen.next();
    }
    if (rest) {
        out <<= static_cast<unsigned>(rest);
        out += gen.next() >> (64 - rest);
    }
    return out;
}

}  // namespace pierce
