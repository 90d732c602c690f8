// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pierce/digit_stats.hpp"
#include "pierce/parallel.hpp"
#include "pierce/sampler.hpp"

namespace pierce {

struct FrequencyConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1;
    std::uint64_t depth = 1;
    BigInt digit = 1;
    std::uint64_t bits = 1024;
    unsigned workers = 1;
};

struct FrequencySampleRow {
    std::uint64_t index = 0;
    std::uint64_t observed = 0;  // digits actually available, <= depth
    std::uint64_t count = 0;     // occurrences of the tracked digit
    BigInt max_digit = 0;
    bool included = false;  // false when the expansion terminated early
};

struct FrequencySummary {
    FrequencyConfig config;
    std::uint64_t included = 0;
    std::uint64_t excluded = 0;
    Rational mean_count;      // mean of count over included samples
    Rational mean_frequency;  // mean of count/depth over included samples
    std::uint64_t max_count = 0;
    std::vector<std::uint64_t> sorted_counts;  // included samples, ascending
    std::vector<FrequencySampleRow> rows;      // per-sample, in index order

    // nearest-rank percentile over included samples
    std::uint64_t percentile_count(unsigned p) const {
        if (sorted_counts.empty()) throw ValidationError("percentile of empty sample set");
        std::uint64_t rank = (p * sorted_counts.size() + 99) / 100;
        if (rank == 0) rank = 1;
        if (rank > sorted_counts.size()) rank = sorted_counts.size();
        return sorted_counts[rank - 1];
    }
};

/// Counts the tracked digit among the first `depth` g-digits of `samples`
/// uniform dyadic rationals.  Samples are independent with per-index
/// substreams; aggregation runs in index order, so the summary is a pure
/// function of the config no matter how many workers execute it.
inline FrequencySummary frequency_experiment(const FrequencyConfig& config) {
    if (config.samples == 0 || config.depth == 0)
        throw ValidationError("frequency_experiment: samples and depth must be >= 1");
    if (config.digit < 1) throw ValidationError("frequency_experiment: digit must be >= 1");

    FrequencySummary out;
    out.config = config;
    out.rows.resize(config.samples);

    UniformSampler sampler(config.seed, config.bits);
    parallel_for_index(config.samples, config.workers, [&](std::uint64_t i) {
        Rational x = sampler.sample(i);
        ExpansionPrefix p = expand_prefix(x, config.depth);
        FrequencySampleRow row;
        row.index = i;
        row.observed = p.digits.size();
        row.included = row.observed == config.depth;
        if (row.observed > 0) {
            DigitStats stats = digit_stats(p.digits, row.observed);
            row.count = stats.count(config.digit);
            row.max_digit = stats.max_digit;
        }
        out.rows[i] = std::move(row);
    });

    BigInt total_count = 0;
    for (const FrequencySampleRow& row : out.rows) {
        if (!row.included) {
            ++out.excluded;
            continue;
        }
        ++out.included;
        total_count += row.count;
        out.max_count = std::max(out.max_count, row.count);
        out.sorted_counts.push_back(row.count);
    }
    std::sort(out.sorted_counts.begin(), out.sorted_counts.end());
    if (out.included > 0) {
        out.mean_count = make_rational(total_count, BigInt(out.included));
        out.mean_frequency = out.mean_count / config.depth;
    }
    return out;
}

}  // namespace pierce
