// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pierce/digit_stats.hpp"
#include "pierce/parallel.hpp"
#include "pierce/random_series.hpp"
#include "pierce/sampler.hpp"

namespace pierce {

/// Two-sided Kolmogorov-Smirnov statistic of a sample set against the
/// uniform law on [0,1], exact over rationals:
///   D = max_i max( i/N - x_(i), x_(i) - (i-1)/N ).
inline Rational ks_uniform(std::vector<Rational> samples) {
    if (samples.empty()) throw ValidationError("ks_uniform: need at least one sample");
    std::sort(samples.begin(), samples.end());
    const std::uint64_t n = samples.size();
    Rational d = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        Rational above = make_rational(i, n) - samples[i - 1];
        Rational below = samples[i - 1] - make_rational(i - 1, n);
        if (above > d) d = above;
        if (below > d) d = below;
    }
    return d;
}

/// Exact sup distance between two empirical CDFs.  Zero iff the two sample
/// multisets coincide.
inline Rational ks_two_sample(std::vector<Rational> a, std::vector<Rational> b) {
    if (a.empty() || b.empty()) throw ValidationError("ks_two_sample: need samples on both sides");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::uint64_t na = a.size(), nb = b.size();
    Rational d = 0;
    std::uint64_t i = 0, j = 0;
    while (i < na || j < nb) {
        Rational x = i < na && (j >= nb || a[i] <= b[j]) ? a[i] : b[j];
        while (i < na && a[i] == x) ++i;
        while (j < nb && b[j] == x) ++j;
        Rational gap = make_rational(i, na) - make_rational(j, nb);
        if (gap < 0) gap = -gap;
        if (gap > d) d = gap;
    }
    return d;
}

struct SingularityConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1;
    std::uint64_t depth = 1;
    BigInt digit = 1;  // the tracked digit i0
    std::uint64_t bits = 1024;
    unsigned workers = 1;
};

struct SingularityReport {
    SingularityConfig config;
    Rational series_freq;    // mean frequency of the digit over random-series samples
    Rational lebesgue_freq;  // same under uniform sampling (excluded samples dropped)
    std::uint64_t lebesgue_excluded = 0;
    Rational divergence_partial;  // sum_{k<=depth} p_{i0,k}
    Rational ks_statistic;        // series sample midpoints vs uniform
    Rational resolution;          // max enclosing-cylinder width of the samples
};

/// Desk-scale witness of the mutual singularity of the random-series law
/// and Lebesgue measure: the tracked digit keeps a fat frequency under the
/// series law while uniform samples starve it, and the empirical CDF of the
/// series (at cylinder-midpoint resolution) separates from the diagonal.
///
/// Series sample i draws from substream(seed, i); uniform sample j uses
/// index samples + j of the same seed space.  Everything aggregates in
/// index order, independent of the worker count.
inline SingularityReport singularity_experiment(const StochasticMatrix& matrix,
                                                const SingularityConfig& config) {
    if (config.samples == 0 || config.depth == 0)
        throw ValidationError("singularity_experiment: samples and depth must be >= 1");
    if (config.digit < 1) throw ValidationError("singularity_experiment: digit must be >= 1");

    SingularityReport report;
    report.config = config;

    const std::uint64_t N = config.samples;
    std::vector<std::uint64_t> series_counts(N);
    std::vector<Rational> midpoints(N);
    std::vector<Rational> widths(N);
    std::vector<std::int64_t> uniform_counts(N);  // -1 marks an excluded sample

    UniformSampler sampler(config.seed, config.bits);
    parallel_for_index(N, config.workers, [&](std::uint64_t i) {
        SeriesSample s = sample_series(matrix, config.depth, substream(config.seed, i));
        series_counts[i] = digit_stats(s.digits, config.depth).count(config.digit);
        midpoints[i] = s.cell.midpoint();
        widths[i] = s.cell.length;

        Rational x = sampler.sample(N + i);
        ExpansionPrefix p = expand_prefix(x, config.depth);
        if (p.digits.size() == config.depth)
            uniform_counts[i] =
                static_cast<std::int64_t>(digit_stats(p.digits, config.depth).count(config.digit));
        else
            uniform_counts[i] = -1;
    });

    BigInt series_total = 0;
    for (std::uint64_t c : series_counts) series_total += c;
    report.series_freq = make_rational(series_total, BigInt(N) * config.depth);

    BigInt uniform_total = 0;
    std::uint64_t included = 0;
    for (std::int64_t c : uniform_counts) {
        if (c < 0) {
            ++report.lebesgue_excluded;
            continue;
        }
        ++included;
        uniform_total += c;
    }
    report.lebesgue_freq =
        included == 0 ? Rational(0) : make_rational(uniform_total, BigInt(included) * config.depth);

    report.divergence_partial = 0;
    for (std::uint64_t k = 1; k <= config.depth; ++k)
        report.divergence_partial += matrix.row(k).probability(config.digit);

    report.resolution = 0;
    for (const Rational& w : widths)
        if (w > report.resolution) report.resolution = w;
    report.ks_statistic = ks_uniform(std::move(midpoints));
    return report;
}

}  // namespace pierce
