// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: every operation of the library as a seeded,
// reproducible experiment with machine-readable output.  Identical
// invocations produce byte-identical documents; exit codes are 0 on
// success, 2 on validation errors, 3 when a work cap is exceeded.

#include "CLI11.hpp"

#include "pierce/pierce.hpp"
#include "pierce/report.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using pierce::Json;
using pierce::Rational;

struct OutputOptions {
    std::string path;  // empty = stdout
    std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "write output to a file instead of stdout");
}

void emit(const std::string& text, const OutputOptions& out) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw pierce::ValidationError("cannot open output file: " + out.path);
    f << text;
}

void emit_json(const Json& doc, const OutputOptions& out) { emit(doc.dump(2) + "\n", out); }

void require_json(const OutputOptions& out, const char* command) {
    if (out.format != "json")
        throw pierce::ValidationError(std::string(command) + " supports only --format json");
}

// ---------------------------------------------------------------------------

struct ExpandArgs {
    std::string x;
    std::uint64_t depth = 0;  // 0 = full expansion
    OutputOptions out;
};

void run_expand(const ExpandArgs& a) {
    require_json(a.out, "expand");
    Rational x = pierce::parse_rational(a.x);
    pierce::ExpansionPrefix p = pierce::expand_prefix(
        x, a.depth == 0 ? std::numeric_limits<std::uint64_t>::max() : a.depth);

    Json doc;
    doc["config"] = Json{{"command", "expand"}, {"x", a.x}, {"depth", a.depth}};
    doc["g_digits"] = p.digits.str();
    doc["q_digits"] = pierce::q_from_g(p.digits).str();
    doc["terminated"] = p.complete;
    Json sums = Json::array();
    for (const Rational& s : pierce::partial_sums(p.digits, p.digits.size()))
        sums.push_back(pierce::rational_str(s));
    doc["partial_sums"] = sums;
    doc["value"] = pierce::rational_field(pierce::evaluate(p.digits));
    emit_json(doc, a.out);
}

struct CylinderArgs {
    std::string prefix;
    OutputOptions out;
};

void run_cylinder(const CylinderArgs& a) {
    require_json(a.out, "cylinder");
    pierce::Cylinder c = pierce::cylinder(pierce::GSequence::parse(a.prefix));

    Json doc;
    doc["config"] = Json{{"command", "cylinder"}, {"prefix", a.prefix}};
    std::string sigma;
    for (std::size_t i = 0; i < c.sigma.size(); ++i) {
        if (i) sigma += ',';
        sigma += c.sigma[i].str();
    }
    doc["sigma"] = sigma;
    doc["left"] = pierce::rational_field(c.left);
    doc["right"] = pierce::rational_field(c.right);
    doc["length"] = pierce::rational_field(c.length);
    emit_json(doc, a.out);
}

struct MeasureArgs {
    std::string file;
    std::uint64_t depth = 1;
    std::uint64_t cutoff = 1000;
    std::uint64_t work_cap = 10'000'000;
    OutputOptions out;
};

void run_measure(const MeasureArgs& a) {
    require_json(a.out, "measure");
    pierce::DigitConstraint constraint = pierce::DigitConstraint::parse_file(a.file);
    pierce::MeasureEstimate est = pierce::cover_measure(constraint, a.depth, a.cutoff, a.work_cap);

    Json doc;
    doc["config"] = Json{{"command", "measure"},
                         {"file", a.file},
                         {"depth", a.depth},
                         {"cutoff", a.cutoff},
                         {"max_work", a.work_cap}};
    doc.update(pierce::to_json(est));
    emit_json(doc, a.out);
}

struct HausdorffArgs {
    std::uint64_t alphabet = 1;
    std::string alpha = "1";
    std::uint64_t kmax = 1;
    unsigned digits = 30;
    OutputOptions out;
};

void run_hausdorff(const HausdorffArgs& a) {
    require_json(a.out, "hausdorff");
    Rational alpha = pierce::parse_rational(a.alpha);

    Json doc;
    doc["config"] = Json{{"command", "hausdorff"},
                         {"alphabet", a.alphabet},
                         {"alpha", a.alpha},
                         {"kmax", a.kmax},
                         {"digits", a.digits}};
    doc["decreasing_from"] = pierce::alpha_volume_decreasing_from(a.alphabet, alpha);
    Json table = Json::array();
    for (std::uint64_t k = 1; k <= a.kmax; ++k) {
        pierce::AlphaVolumeBounds v = pierce::alpha_volume(a.alphabet, alpha, k, a.digits);
        Json row;
        row["k"] = k;
        row["lower"] = pierce::rational_str(v.lower);
        row["upper"] = pierce::rational_str(v.upper);
        row["approx"] = pierce::decimal_str(v.upper, 12);
        row["exact"] = v.exact;
        if (k > 1) row["below_previous"] = pierce::alpha_volume_compare(a.alphabet, alpha, k, k - 1) < 0;
        table.push_back(row);
    }
    doc["volumes"] = table;
    emit_json(doc, a.out);
}

struct FrequencyArgs {
    pierce::FrequencyConfig cfg;
    std::string digit = "1";
    OutputOptions out;
};

void run_frequency(FrequencyArgs& a) {
    a.cfg.digit = pierce::BigInt(a.digit);
    pierce::FrequencySummary summary = pierce::frequency_experiment(a.cfg);

    // workers deliberately not echoed: the report is independent of them
    Json config{{"command", "frequency"}, {"seed", a.cfg.seed}, {"samples", a.cfg.samples},
                {"depth", a.cfg.depth},   {"digit", a.digit},   {"bits", a.cfg.bits}};
    if (a.out.format == "csv") {
        std::ostringstream csv;
        csv << "# " << config.dump() << "\n";
        pierce::write_csv(summary, csv);
        emit(csv.str(), a.out);
        return;
    }
    Json doc;
    doc["config"] = config;
    doc.update(pierce::to_json(summary));
    emit_json(doc, a.out);
}

struct EtaArgs {
    std::string file;
    std::uint64_t depth = 1;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1;
    OutputOptions out;
};

void run_eta(const EtaArgs& a) {
    pierce::StochasticMatrix matrix = pierce::StochasticMatrix::parse_file(a.file);
    if (a.samples == 0) throw pierce::ValidationError("eta: samples must be >= 1");

    Json config{{"command", "eta"},
                {"file", a.file},
                {"seed", a.seed},
                {"depth", a.depth},
                {"samples", a.samples}};
    if (a.out.format == "csv") {
        std::ostringstream csv;
        csv << "# " << config.dump() << "\n";
        csv << "sample,digits\n";
        for (std::uint64_t i = 0; i < a.samples; ++i) {
            pierce::SeriesSample s =
                pierce::sample_series(matrix, a.depth, pierce::substream(a.seed, i));
            csv << i << ",\"" << s.digits.str() << "\"\n";
        }
        emit(csv.str(), a.out);
        return;
    }
    Json doc;
    doc["config"] = config;
    Json rows = Json::array();
    for (std::uint64_t i = 0; i < a.samples; ++i) {
        pierce::SeriesSample s =
            pierce::sample_series(matrix, a.depth, pierce::substream(a.seed, i));
        rows.push_back(pierce::to_json(s));
    }
    doc["samples"] = rows;
    emit_json(doc, a.out);
}

struct SingularityArgs {
    std::string file;
    pierce::SingularityConfig cfg;
    std::string digit = "1";
    OutputOptions out;
};

void run_singularity(SingularityArgs& a) {
    require_json(a.out, "singularity");
    a.cfg.digit = pierce::BigInt(a.digit);
    pierce::StochasticMatrix matrix = pierce::StochasticMatrix::parse_file(a.file);
    pierce::SingularityReport report = pierce::singularity_experiment(matrix, a.cfg);

    Json doc;
    doc["config"] = Json{{"command", "singularity"}, {"file", a.file},
                         {"seed", a.cfg.seed},       {"samples", a.cfg.samples},
                         {"depth", a.cfg.depth},     {"digit", a.digit},
                         {"bits", a.cfg.bits}};
    doc.update(pierce::to_json(report));
    emit_json(doc, a.out);
}

struct PositionMassArgs {
    std::string digit = "1";
    std::uint64_t position = 1;
    std::string mode = "exact";
    std::uint64_t cutoff = 0;
    OutputOptions out;
};

void run_position_mass(const PositionMassArgs& a) {
    require_json(a.out, "a-k-measure");
    std::optional<std::uint64_t> cutoff;
    if (a.mode == "truncated") {
        if (a.cutoff == 0)
            throw pierce::ValidationError("a-k-measure: truncated mode needs --cutoff");
        cutoff = a.cutoff;
    }
    pierce::MeasureEstimate est =
        pierce::digit_position_mass(pierce::BigInt(a.digit), a.position, cutoff);

    Json doc;
    doc["config"] = Json{{"command", "a-k-measure"},
                         {"digit", a.digit},
                         {"position", a.position},
                         {"mode", a.mode},
                         {"cutoff", a.cutoff}};
    doc.update(pierce::to_json(est));
    emit_json(doc, a.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the alternating expansion with increasing denominators"};
    app.require_subcommand(1);

    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "digit expansion of a rational in (0,1)");
    expand->add_option("x", expand_args.x, "rational, as p/q")->required();
    expand->add_option("--depth", expand_args.depth, "emit at most this many digits (0 = all)");
    add_output_options(expand, expand_args.out);

    CylinderArgs cylinder_args;
    auto* cyl = app.add_subcommand("cylinder", "interval of all reals with a given digit prefix");
    cyl->add_option("prefix", cylinder_args.prefix, "comma-separated digits; empty for [0,1]");
    add_output_options(cyl, cylinder_args.out);

    MeasureArgs measure_args;
    auto* measure = app.add_subcommand("measure", "cover measure of a digit-restricted set");
    measure->add_option("file", measure_args.file, "constraint file, one level per line")
        ->required();
    measure->add_option("--depth", measure_args.depth, "cover depth")->required();
    measure->add_option("--cutoff", measure_args.cutoff, "digit cutoff for unbounded levels")
        ->capture_default_str();
    measure->add_option("--max-work", measure_args.work_cap, "transition work cap")
        ->capture_default_str();
    add_output_options(measure, measure_args.out);

    HausdorffArgs hausdorff_args;
    auto* hausdorff = app.add_subcommand("hausdorff", "alpha-volumes of bounded-digit covers");
    hausdorff->add_option("--alphabet", hausdorff_args.alphabet, "digit alphabet size n")
        ->required();
    hausdorff->add_option("--alpha", hausdorff_args.alpha, "exponent in (0,1], as p/q")
        ->required();
    hausdorff->add_option("--kmax", hausdorff_args.kmax, "table depth")->required();
    hausdorff->add_option("--digits", hausdorff_args.digits, "enclosure precision in decimals")
        ->capture_default_str();
    add_output_options(hausdorff, hausdorff_args.out);

    FrequencyArgs frequency_args;
    auto* frequency =
        app.add_subcommand("frequency", "digit counts over uniform dyadic samples");
    frequency->add_option("--seed", frequency_args.cfg.seed, "64-bit seed")->capture_default_str();
    frequency->add_option("--samples", frequency_args.cfg.samples, "sample count")->required();
    frequency->add_option("--depth", frequency_args.cfg.depth, "digits per sample")->required();
    frequency->add_option("--digit", frequency_args.digit, "digit to count")
        ->capture_default_str();
    frequency->add_option("--bits", frequency_args.cfg.bits, "dyadic sample bit budget")
        ->capture_default_str();
    frequency->add_option("--workers", frequency_args.cfg.workers, "worker threads")
        ->capture_default_str();
    add_output_options(frequency, frequency_args.out);

    EtaArgs eta_args;
    auto* eta = app.add_subcommand("eta", "random series with independent digits");
    eta->add_option("file", eta_args.file, "matrix file, one row per line")->required();
    eta->add_option("--depth", eta_args.depth, "digits per sample")->required();
    eta->add_option("--seed", eta_args.seed, "64-bit seed")->capture_default_str();
    eta->add_option("--samples", eta_args.samples, "sample count")->capture_default_str();
    add_output_options(eta, eta_args.out);

    SingularityArgs singularity_args;
    auto* singularity =
        app.add_subcommand("singularity", "series law versus Lebesgue: frequencies and KS");
    singularity->add_option("file", singularity_args.file, "matrix file")->required();
    singularity->add_option("--digit", singularity_args.digit, "tracked digit")
        ->capture_default_str();
    singularity->add_option("--samples", singularity_args.cfg.samples, "sample count")
        ->required();
    singularity->add_option("--depth", singularity_args.cfg.depth, "digits per sample")
        ->required();
    singularity->add_option("--seed", singularity_args.cfg.seed, "64-bit seed")
        ->capture_default_str();
    singularity->add_option("--bits", singularity_args.cfg.bits, "uniform sample bit budget")
        ->capture_default_str();
    singularity->add_option("--workers", singularity_args.cfg.workers, "worker threads")
        ->capture_default_str();
    add_output_options(singularity, singularity_args.out);

    PositionMassArgs mass_args;
    auto* mass = app.add_subcommand("a-k-measure", "measure of {x : digit at position k = i}");
    mass->add_option("--digit", mass_args.digit, "digit i")->capture_default_str();
    mass->add_option("--position", mass_args.position, "position k")->required();
    mass->add_option("--mode", mass_args.mode, "exact or truncated")
        ->check(CLI::IsMember({"exact", "truncated"}))
        ->capture_default_str();
    mass->add_option("--cutoff", mass_args.cutoff, "digit cutoff for truncated mode");
    add_output_options(mass, mass_args.out);

    try {
        app.parse(argc, argv);
        if (expand->parsed()) run_expand(expand_args);
        if (cyl->parsed()) run_cylinder(cylinder_args);
        if (measure->parsed()) run_measure(measure_args);
        if (hausdorff->parsed()) run_hausdorff(hausdorff_args);
        if (frequency->parsed()) run_frequency(frequency_args);
        if (eta->parsed()) run_eta(eta_args);
        if (singularity->parsed()) run_singularity(singularity_args);
        if (mass->parsed()) run_position_mass(mass_args);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pierce::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pierce::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pierce::DepthExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
