#include "doctest.h"
#include "corpus_files.hpp"

#include "toricfs/cli.hpp"
#include "toricfs/report.hpp"

#include <sstream>

using namespace toricfs;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    for (auto& a : args)
        if (a.rfind("@", 0) == 0)
            a = corpus_path(a.substr(1));
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return read_file(std::string(TORICFS_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_CASE("golden reports")
{
    struct Case {
        std::string file;
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {"invariants_p2.txt", {"invariants", "@p2"}, 0},
        {"invariants_p1xp1.json", {"--format", "json", "invariants", "@p1xp1"}, 0},
        {"invariants_weighted_plane.txt", {"invariants", "@weighted_plane"}, 1},
        {"validate_bl3_p2.txt", {"validate", "@bl3_p2"}, 0},
        {"theorem1_p2_O2.json", {"theorem1", "@p2", "--divisor", "@p2_O2", "--format", "json"}, 0},
        {"theorem1_p2_O1.txt", {"theorem1", "@p2", "--divisor", "@p2_O1"}, 0},
        {"normality_p1_O3.txt", {"normality", "@p1", "--divisor", "@p1_O3", "--max-k", "6"}, 0},
        {"quadrics_p1xp1_O11.txt", {"quadrics", "@p1xp1", "--divisor", "@p1xp1_O11", "--max-degree", "4"}, 0},
        {"quadrics_p2_O2.json", {"--format", "json", "quadrics", "@p2", "--divisor", "@p2_O2"}, 0},
        {"bundle_p1_O0_O1.txt", {"bundle", "@p1", "--L", "@p1_O0", "--M", "@p1_O1"}, 0},
        {"bundle_p2_search.txt", {"bundle", "@p2", "--L", "@p2_O1", "--M", "@p2_O1", "--b-max", "4"}, 0},
        {"split_check_p2.json", {"--format", "json", "split-check", "@p2", "-p", "3", "--seed", "5"}, 0},
        {"split_check_weighted_plane.txt", {"split-check", "@weighted_plane", "-p", "2"}, 1},
    };
    for (const auto& c : cases) {
        CAPTURE(c.file);
        Run r = run(c.args);
        CHECK(r.code == c.code);
        CHECK(r.err.empty());
        CHECK(r.out == golden(c.file));
    }
}

TEST_CASE("input errors exit with 2")
{
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"invariants", "/nonexistent.json"}).code == 2);
    CHECK(run({"normality", "@p2", "--divisor", "@p1_O3"}).code == 2);
    CHECK(run({"split-check", "-p", "4"}).code == 2);
    CHECK(run({"--format", "xml", "invariants", "@p2"}).code == 2);
    CHECK(run({"quadrics", "@p2", "--divisor", "@p2_O1", "--max-degree", "2"}).code == 2);
    Run bad = run({"normality", "@p2", "--divisor", "@p1_O3"});
    CHECK(bad.err.find("coeffs") != std::string::npos);
    CHECK(bad.out.empty());
}

TEST_CASE("failing checks exit with 1 and name a witness")
{
    Run r = run({"theorem1", "@weighted_plane", "--divisor", "@p2_O1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL  fan is smooth") != std::string::npos);
    CHECK(r.out.find("cone 0 has determinant 2") != std::string::npos);

    Run z = run({"theorem1", "@p1", "--divisor", "@p1_O0"});
    CHECK(z.code == 1);
    CHECK(z.out.find("ampleness fails at cone") != std::string::npos);
}

TEST_CASE("reports are deterministic")
{
    std::vector<std::string> args{"--format", "json", "--seed", "3", "theorem1", "@p2", "--divisor", "@p2_O2"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> split{"split-check", "-p", "5", "--seed", "9", "--dim", "3"};
    CHECK(run(split).out == run(split).out);
}

TEST_CASE("empty report")
{
    Report r;
    r.command = "empty";
    CHECK(r.passed());
    std::string json = render(r, Format::Json);
    CHECK(json.find("\"checks\": []") != std::string::npos);
    CHECK(json.find("\"verdict\": \"PASS\"") != std::string::npos);
    CHECK(render(r, Format::Text).find("(none)") != std::string::npos);
}
