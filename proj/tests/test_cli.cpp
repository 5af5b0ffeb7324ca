#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmetric/catalog.hpp"
#include "gmetric/cli.hpp"
#include "gmetric/space_json.hpp"

using namespace gmetric;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "gmetric_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const auto path = temp_dir() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

std::string dna_scheme_file() {
    return write_file("dna.json",
                      R"({"alphabet": "ACGT", "alpha": -1, "beta": 1, "gamma": 2})");
}

std::string five_metric_file() {
    const auto path = (temp_dir() / "five.json").string();
    save_space(build_space({CatalogName::five_metric_negative}), path);
    return path;
}

} // namespace

TEST_CASE("check reports all axioms passing on the arity-5 table") {
    const auto res = run({"check", "--space", five_metric_file()});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("all axioms pass (5-Metric)") != std::string::npos);
}

TEST_CASE("check fails with exit 1 on a broken table") {
    auto doc = space_to_json(build_space({CatalogName::five_metric_negative}));
    for (auto& entry : doc["values"])
        if (entry["tuple"] == json::array({"a", "a", "a", "a", "b"}))
            entry["value"] = 10.0;
    const auto path = write_file("broken.json", doc.dump());
    const auto res = run({"check", "--space", path});
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("(n-inq)") != std::string::npos);
    CHECK(res.out.find("FAIL") != std::string::npos);
}

TEST_CASE("missing and malformed inputs exit 2") {
    CHECK(run({"check", "--space", "/nonexistent/nope.json"}).exit_code == 2);
    const auto incomplete = write_file(
        "incomplete.json",
        R"({"kind": "metric", "arity": 2, "elements": ["x","y"], "values": []})");
    CHECK(run({"check", "--space", incomplete}).exit_code == 2);
    CHECK(run({"check"}).exit_code == 2);
    CHECK(run({"check", "--space", five_metric_file(), "--frobnicate"}).exit_code ==
          2);
    CHECK(run({}).exit_code == 2);
}

TEST_CASE("align prints the worked score and one optimal alignment") {
    const auto res =
        run({"align", "--scheme", dna_scheme_file(), "CGATC", "CAGA"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("score 2") != std::string::npos);
    CHECK(res.out.find("CGATC") != std::string::npos);

    const auto multi = run({"align", "--scheme", dna_scheme_file(), "CGATC",
                            "CAGA", "CAGA"});
    CHECK(multi.exit_code == 0);
    CHECK(multi.out.find("score 0") != std::string::npos);
}

TEST_CASE("align validates schemes") {
    const auto bad = write_file(
        "bad_scheme.json",
        R"({"alphabet": "ACGT", "alpha": 1, "beta": -1, "gamma": -2})");
    const auto res = run({"align", "--scheme", bad, "--validate"});
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("violated") != std::string::npos);

    CHECK(run({"align", "--scheme", dna_scheme_file(), "--validate"}).exit_code ==
          0);
}

TEST_CASE("scores are still computed under a failing scheme, with a warning") {
    const auto loose = write_file(
        "loose_scheme.json",
        R"({"alphabet": "ACGT", "alpha": -1, "beta": 5, "gamma": 2})");
    const auto res = run({"align", "--scheme", loose, "CGATC", "CAGA"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("score") != std::string::npos);
    CHECK(res.err.find("warning") != std::string::npos);
}

TEST_CASE("align builds word spaces") {
    const auto out_path = (temp_dir() / "words.json").string();
    const auto res = run({"align", "--scheme", dna_scheme_file(), "CGATC", "CAGA",
                          "--space-out", out_path});
    REQUIRE(res.exit_code == 0);
    const FiniteSpace sp = load_space(out_path);
    CHECK(sp.kind().family == Family::StrongPartialMetric);
    CHECK(sp.value_pow(sp.require_index("CGATC"), sp.require_index("CAGA")) == 2.0);
}

TEST_CASE("derive lifts, induces, shifts and computes margins") {
    const auto mp = (temp_dir() / "maxp.json").string();
    save_space(build_space({CatalogName::max_partial, {1, 2, 3}}), mp);

    const auto lifted = run({"derive", "--space", mp, "--op", "lift", "--n", "3"});
    CHECK(lifted.exit_code == 0);
    CHECK(json::parse(lifted.out)["kind"] == "partial_n_metric");

    const auto induced = run({"derive", "--space", mp, "--op", "induce"});
    CHECK(induced.exit_code == 0);
    CHECK(json::parse(induced.out)["kind"] == "metric");

    const auto five = five_metric_file();
    const auto margin = run({"derive", "--space", five, "--op", "margin", "--xs",
                             "a,a,a,a,b", "--ys", "b,b,b,b,b", "--t", "5"});
    CHECK(margin.exit_code == 0);
    CHECK(margin.out.find("13") != std::string::npos);

    const auto shifted = run({"derive", "--space", five, "--op", "shift", "--r",
                              "-3"});
    CHECK(shifted.exit_code == 0);
    CHECK(json::parse(shifted.out)["kind"] == "strong_partial_n_metric");

    CHECK(run({"derive", "--space", mp, "--op", "shift"}).exit_code == 2);
    CHECK(run({"derive", "--space", mp, "--op", "bogus"}).exit_code == 2);
}

TEST_CASE("topology prints open sets and separation verdicts") {
    const auto aug = (temp_dir() / "aug.json").string();
    save_space(build_space({CatalogName::augmented_real_line, {0}}), aug);
    const auto res = run({"topology", "--space", aug});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("T0: true") != std::string::npos);
    CHECK(res.out.find("T1: false") != std::string::npos);

    const auto ball_res =
        run({"topology", "--space", aug, "--ball", "@a", "--eps", "0.5"});
    CHECK(ball_res.exit_code == 0);
    CHECK(ball_res.out.find("0") != std::string::npos);

    const auto closure_res =
        run({"topology", "--space", aug, "--closure", "0"});
    CHECK(closure_res.exit_code == 0);
    CHECK(closure_res.out.find("@a") != std::string::npos);
}

TEST_CASE("sequence verdicts through the command line") {
    const auto cauchy = run({"sequence", "--eval", "augmented_real_line",
                             "--generator", "geometric", "--ratio", "0.5",
                             "--count", "30", "--op", "cauchy", "--tol", "1e-6",
                             "--window", "10"});
    CHECK(cauchy.exit_code == 0);
    CHECK(cauchy.out.find("Cauchy") != std::string::npos);

    const auto special_a =
        run({"sequence", "--eval", "augmented_real_line", "--generator",
             "geometric", "--ratio", "0.5", "--count", "30", "--op", "special",
             "--candidate", "@a", "--tol", "1e-6", "--window", "10"});
    CHECK(special_a.exit_code == 1);

    const auto special_zero =
        run({"sequence", "--eval", "augmented_real_line", "--generator",
             "geometric", "--ratio", "0.5", "--count", "30", "--op", "special",
             "--candidate", "0", "--tol", "1e-6", "--window", "10"});
    CHECK(special_zero.exit_code == 0);

    // a finite space with a JSON label sequence
    const auto basic = (temp_dir() / "basic.json").string();
    save_space(build_space({CatalogName::basic_partial}), basic);
    const auto seq = write_file("seq.json",
                                R"(["x","y","x","y","x","y","x","y","x","y"])");
    const auto alt = run({"sequence", "--space", basic, "--seq", seq, "--op",
                          "cauchy", "--window", "5"});
    CHECK(alt.exit_code == 1);
    CHECK(alt.out.find("not Cauchy") != std::string::npos);
}

TEST_CASE("solve drives the three problem kinds") {
    const auto fixed = run({"solve", "--problem", "fixed", "--map", "halving",
                            "--eval", "max_partial", "--x0", "1", "--tol", "1e-6"});
    CHECK(fixed.exit_code == 0);
    CHECK(fixed.out.find("fixed_point") != std::string::npos);

    const auto jump =
        run({"solve", "--problem", "fixed", "--map", "halving_with_jump",
             "--eval", "max_partial", "--x0", "1", "--tol", "1e-6"});
    CHECK(jump.exit_code == 1);
    CHECK(jump.out.find("no_certificate") != std::string::npos);
    CHECK(jump.out.find("weak_orbital_limit: FAIL") != std::string::npos);

    const auto coin =
        run({"solve", "--problem", "coincidence", "--map", "identity", "--map2",
             "affine", "--q1", "0.333333333333333315", "--q2",
             "0.333333333333333315", "--selector", "affine", "--s1",
             "0.333333333333333315", "--s2", "0.333333333333333315", "--eval",
             "abs_metric", "--x0", "0", "--c", "0.3333333333333334", "--r", "0",
             "--A", "1.0000001", "--tol", "1e-6"});
    CHECK(coin.exit_code == 0);
    CHECK(coin.out.find("coincidence_point") != std::string::npos);
    CHECK(coin.out.find("0.5") != std::string::npos);
}

TEST_CASE("solve accepts a JSON configuration") {
    const auto config = write_file("solve.json", R"({
      "problem": "fixed",
      "map": {"name": "halving"},
      "eval": {"name": "max_partial"},
      "x0": "1"
    })");
    const auto res = run({"solve", "--config", config, "--tol", "1e-6"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("fixed_point") != std::string::npos);
}

TEST_CASE("words can arrive through a file, one per line") {
    const auto words = write_file("words.txt", "CGATC\nCAGA\n");
    const auto res = run({"align", "--scheme", dna_scheme_file(), "--words-file",
                          words});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("score 2") != std::string::npos);
}

TEST_CASE("pair verdicts over two sequence files") {
    const auto seq1 = write_file("s1.json", R"([1, 0.5, 0.25, 0.125, 0.0625,
        0.03125, 0.015625, 0.0078125, 0.00390625, 0.001953125])");
    const auto seq2 = seq1;
    const auto res = run({"sequence", "--eval", "max_partial", "--seq", seq1,
                          "--seq2", seq2, "--op", "pair", "--tol", "0.05",
                          "--window", "5"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("Cauchy pair") != std::string::npos);
}

TEST_CASE("help is a pass outcome") {
    const auto res = run({"--help"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("check") != std::string::npos);
}

TEST_CASE("catalog lists the built-ins and emits spaces") {
    const auto a = run({"catalog"});
    const auto b = run({"catalog"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out); // identical across invocations
    for (const char* name :
         {"max_partial", "augmented_real_line", "five_metric_negative"})
        CHECK(a.out.find(name) != std::string::npos);

    const auto emitted = run({"catalog", "--emit", "max_partial", "--points",
                              "1,2,3"});
    CHECK(emitted.exit_code == 0);
    const FiniteSpace sp = space_from_json(json::parse(emitted.out));
    CHECK(sp.size() == 3);

    const auto grid = run({"catalog", "--emit", "max_partial", "--grid", "5",
                           "--lo", "0", "--hi", "1", "--arity", "2"});
    CHECK(grid.exit_code == 0);
    CHECK(space_from_json(json::parse(grid.out)).size() == 5);

    CHECK(run({"catalog", "--emit", "not_a_space"}).exit_code == 2);
}

TEST_CASE("json reports round trip byte-identically") {
    const std::vector<std::vector<std::string>> cases = {
        {"check", "--space", five_metric_file(), "--json"},
        {"align", "--scheme", dna_scheme_file(), "CGATC", "CAGA", "--json"},
        {"catalog", "--json"},
        {"solve", "--problem", "fixed", "--map", "halving", "--eval",
         "max_partial", "--x0", "1", "--tol", "1e-6", "--json"},
        {"sequence", "--eval", "augmented_real_line", "--generator", "geometric",
         "--ratio", "0.5", "--count", "30", "--op", "cauchy", "--tol", "1e-6",
         "--window", "10", "--json"},
    };
    for (const auto& args : cases) {
        const auto res = run(args);
        CAPTURE(args[0]);
        const json parsed = json::parse(res.out);
        CHECK(parsed.dump(2) + "\n" == res.out);
    }
    // topology json on a small space
    const auto aug = (temp_dir() / "aug2.json").string();
    save_space(build_space({CatalogName::augmented_real_line, {0}}), aug);
    const auto res = run({"topology", "--space", aug, "--json"});
    CHECK(json::parse(res.out).dump(2) + "\n" == res.out);
}
