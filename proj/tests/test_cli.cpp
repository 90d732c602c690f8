// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef PIERCE_CLI_PATH
#error "PIERCE_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string scratch_path(const std::string& name) {
    return std::string("/tmp/pierce_cli_test_") + name;
}

RunResult run_cli(const std::string& args) {
    std::string out = scratch_path("stdout");
    std::string cmd = std::string(PIERCE_CLI_PATH) + " " + args + " > " + out + " 2> " +
                      scratch_path("stderr");
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    r.output = buf.str();
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("expand: worked examples and domain errors") {
    RunResult r = run_cli("expand 2/5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"g_digits\": \"2,3\""));
    CHECK(contains(r.output, "\"q_digits\": \"2,5\""));
    CHECK(contains(r.output, "\"exact\": \"2/5\""));

    r = run_cli("expand 1/2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"g_digits\": \"2\""));

    CHECK(run_cli("expand 0/1").exit_code == 2);
    CHECK(run_cli("expand 7/5").exit_code == 2);
    CHECK(run_cli("expand not-a-number").exit_code == 2);
}

TEST_CASE("cylinder: endpoints, lengths, empty prefix convention") {
    RunResult r = run_cli("cylinder 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"exact\": \"1/2\""));
    CHECK(contains(r.output, "\"exact\": \"1/1\""));

    r = run_cli("cylinder 1,1");
    CHECK(contains(r.output, "\"exact\": \"1/6\""));

    r = run_cli("cylinder \"\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"exact\": \"0/1\""));
    CHECK(contains(r.output, "\"exact\": \"1/1\""));

    CHECK(run_cli("cylinder 0,2").exit_code == 2);
}

TEST_CASE("measure: constraint files, caps, usage errors") {
    write_file(scratch_path("ones.constraint"), "set:1\n");
    RunResult r = run_cli("measure " + scratch_path("ones.constraint") + " --depth 4 --cutoff 10");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"lower\": \"1/120\""));
    CHECK(contains(r.output, "\"upper\": \"1/120\""));

    write_file(scratch_path("all.constraint"), "all\n");
    r = run_cli("measure " + scratch_path("all.constraint") + " --depth 1 --cutoff 100");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"lower\": \"100/101\""));
    CHECK(contains(r.output, "\"upper\": \"1/1\""));

    write_file(scratch_path("empty.constraint"), "");
    CHECK(run_cli("measure " + scratch_path("empty.constraint") + " --depth 1").exit_code == 2);
    CHECK(run_cli("measure " + scratch_path("missing.constraint") + " --depth 1").exit_code == 2);

    // resource cap exceeded is a distinct exit code
    r = run_cli("measure " + scratch_path("all.constraint") +
                " --depth 3 --cutoff 1000 --max-work 50");
    CHECK(r.exit_code == 3);
}

TEST_CASE("hausdorff: table values and validation") {
    RunResult r = run_cli("hausdorff --alphabet 1 --alpha 1 --kmax 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"lower\": \"1/6\""));
    CHECK(contains(r.output, "\"below_previous\": true"));

    r = run_cli("hausdorff --alphabet 2 --alpha 1 --kmax 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"lower\": \"1/3\""));

    CHECK(run_cli("hausdorff --alphabet 2 --alpha 0 --kmax 3").exit_code == 2);
    CHECK(run_cli("hausdorff --alphabet 2 --alpha 3/2 --kmax 3").exit_code == 2);
}

TEST_CASE("frequency: reruns are byte-identical, csv carries the rows") {
    std::string args = "frequency --seed 11 --samples 25 --depth 20 --digit 1 --bits 512";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"seed\": 11"));
    CHECK(contains(a.output, "mean_count"));

    // the report is byte-identical no matter how many workers computed it
    RunResult w = run_cli(args + " --workers 3");
    CHECK(w.output == a.output);

    RunResult csv = run_cli(args + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output, "sample,observed,count,included"));
    CHECK(contains(csv.output, "\n0,20,"));
}

TEST_CASE("eta: degenerate matrix and reproducibility") {
    write_file(scratch_path("point.matrix"), "1\n");
    RunResult r = run_cli("eta " + scratch_path("point.matrix") + " --depth 6 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"digits\": \"1,1,1,1,1,1\""));
    CHECK(contains(r.output, "\"length\": \"1/5040\""));

    write_file(scratch_path("geo.matrix"), "1/2 geom:1/2\n");
    std::string args = "eta " + scratch_path("geo.matrix") + " --depth 12 --seed 7 --samples 4";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    RunResult csv = run_cli(args + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output, "sample,digits"));

    write_file(scratch_path("bad.matrix"), "1/2 1/3\n");
    CHECK(run_cli("eta " + scratch_path("bad.matrix") + " --depth 3").exit_code == 2);
}

TEST_CASE("singularity: report fields and determinism") {
    write_file(scratch_path("geo.matrix"), "1/2 geom:1/2\n");
    std::string args = "singularity " + scratch_path("geo.matrix") +
                       " --digit 1 --samples 40 --depth 25 --seed 5";
    RunResult a = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "series_frequency"));
    CHECK(contains(a.output, "ks_statistic"));
    CHECK(contains(a.output, "divergence_partial"));
    RunResult b = run_cli(args);
    CHECK(a.output == b.output);
}

TEST_CASE("a-k-measure: closed forms and truncated mode") {
    RunResult r = run_cli("a-k-measure --digit 1 --position 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"lower\": \"1/8\""));
    CHECK(contains(r.output, "\"upper\": \"1/8\""));

    r = run_cli("a-k-measure --digit 3 --position 1");
    CHECK(contains(r.output, "\"lower\": \"1/12\""));

    r = run_cli("a-k-measure --digit 2 --position 2 --mode truncated --cutoff 50");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"cutoff\": 50"));

    CHECK(run_cli("a-k-measure --digit 2 --position 2").exit_code == 2);
    CHECK(run_cli("a-k-measure --digit 2 --position 2 --mode truncated").exit_code == 2);
}

TEST_CASE("usage errors take exit code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("expand").exit_code == 2);
    CHECK(run_cli("expand 1/2 --format yaml").exit_code == 2);
}

TEST_CASE("--out writes the same bytes as stdout") {
    std::string out_path = scratch_path("expand.json");
    RunResult direct = run_cli("expand 3/7");
    RunResult redirected = run_cli("expand 3/7 --out " + out_path);
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.output.empty());
    std::ifstream f(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == direct.output);
    std::remove(out_path.c_str());
}
