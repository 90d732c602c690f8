// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pierce {

// Bad input: wrong domain, malformed text, violated precondition.
// Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed its configured work budget.
// Maps to CLI exit code 3.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An expansion terminated before the requested depth.  Carries how many
// digits were actually available so callers can report the shortfall.
class DepthExhausted : public std::runtime_error {
public:
    DepthExhausted(std::uint64_t achieved, std::uint64_t requested)
        : std::runtime_error("expansion terminated after " + std::to_string(achieved) +
                             " digits, " + std::to_string(requested) + " requested"),
          achieved_(achieved),
          requested_(requested) {}

    std::uint64_t achieved() const { return achieved_; }
    std::uint64_t requested() const { return requested_; }

private:
    std::uint64_t achieved_;
    std::uint64_t requested_;
};

}  // namespace pierce
