// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "pierce/frequency.hpp"
#include "pierce/measure.hpp"
#include "pierce/random_series.hpp"
#include "pierce/rational.hpp"
#include "pierce/singularity.hpp"

namespace pierce {

// insertion-ordered so identical configs serialize byte-identically
using Json = nlohmann::ordered_json;

/// {"exact": "p/q", "approx": "0.0123..."}: every numeric field a report
/// emits is either an exact rational string or carries its own resolution.
inline Json rational_field(const Rational& r, unsigned digits = 12) {
    return Json{{"exact", rational_str(r)}, {"approx", decimal_str(r, digits)}};
}

inline Json to_json(const MeasureEstimate& est) {
    Json j;
    j["lower"] = rational_str(est.lower);
    j["upper"] = rational_str(est.upper);
    j["depth"] = est.depth;
    j["cutoff"] = est.cutoff;
    if (est.empty_level) j["empty_level"] = true;
    j["approx"] = Json{{"lower", decimal_str(est.lower)}, {"upper", decimal_str(est.upper)}};
    return j;
}

inline Json to_json(const FrequencySummary& s) {
    Json j;
    j["samples"] = s.config.samples;
    j["depth"] = s.config.depth;
    j["digit"] = s.config.digit.str();
    j["included"] = s.included;
    j["excluded"] = s.excluded;
    j["mean_count"] = rational_field(s.mean_count);
    j["mean_frequency"] = rational_field(s.mean_frequency);
    j["max_count"] = s.max_count;
    if (!s.sorted_counts.empty()) {
        j["count_percentiles"] = Json{{"p50", s.percentile_count(50)},
                                      {"p90", s.percentile_count(90)},
                                      {"p99", s.percentile_count(99)}};
    }
    return j;
}

// one row per sample: index, digits observed, tracked-digit count
inline void write_csv(const FrequencySummary& s, std::ostream& out) {
    out << "sample,observed,count,included\n";
    for (const FrequencySampleRow& row : s.rows)
        out << row.index << ',' << row.observed << ',' << row.count << ','
            << (row.included ? 1 : 0) << '\n';
}

inline Json to_json(const SingularityReport& r) {
    Json j;
    j["samples"] = r.config.samples;
    j["depth"] = r.config.depth;
    j["digit"] = r.config.digit.str();
    j["series_frequency"] = rational_field(r.series_freq);
    j["lebesgue_frequency"] = rational_field(r.lebesgue_freq);
    j["lebesgue_excluded"] = r.lebesgue_excluded;
    j["frequency_gap"] = rational_field(r.series_freq - r.lebesgue_freq);
    j["divergence_partial"] = rational_field(r.divergence_partial);
    j["ks_statistic"] = rational_field(r.ks_statistic);
    j["resolution"] = rational_str(r.resolution);
    return j;
}

inline Json to_json(const SeriesSample& s) {
    Json j;
    j["digits"] = s.digits.str();
    j["left"] = rational_str(s.cell.left);
    j["right"] = rational_str(s.cell.right);
    j["length"] = rational_str(s.cell.length);
    j["midpoint_approx"] = decimal_str(s.cell.midpoint());
    return j;
}

inline Json to_json(const PurityVerdict& v) {
    Json j;
    switch (v.purity) {
        case PurityClass::Discrete: j["class"] = v.degenerate ? "degenerate" : "discrete"; break;
        case PurityClass::SingularContinuous: j["class"] = "singular-continuous"; break;
        case PurityClass::Undetermined: j["class"] = "undetermined"; break;
    }
    j["decisive"] = v.decisive;
    j["horizon"] = v.horizon;
    j["partial_product"] = rational_field(v.partial_product);
    if (v.decisive) j["tail_row_max"] = rational_str(v.tail_row_max);
    return j;
}

}  // namespace pierce
