// Harness, serialization and CLI integration tests.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cctp/experiment.hpp"
#include "cctp/json_io.hpp"

#include "oracles.hpp"

using namespace cctp;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kTmp = fs::temp_directory_path() / "cctp_harness_tests";

struct CliResult {
    int code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    fs::create_directories(kTmp);
    const fs::path out_path = kTmp / "cli_output.txt";
    const std::string cmd =
        std::string(CCTP_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Drops the trailing wall_ms field of every CSV line.
std::string strip_wall_ms(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.rfind(',');
        out << line.substr(0, pos) << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("scenario JSON round trip") {
    SUBCASE("euclidean instance serializes its points") {
        const Scenario s = generate_random_scenario(7, 3, 99);
        const json j = scenario_to_json(s);
        CHECK(j.at("format") == "cctp-v1");
        CHECK(j.contains("points"));
        CHECK_FALSE(j.contains("costs"));
        const LoadedScenario back = scenario_from_json(j);
        CHECK(back.scenario.blocked() == s.blocked());
        for (VertexId i = 0; i < 7; ++i)
            for (VertexId j2 = i + 1; j2 < 7; ++j2)
                CHECK(back.scenario.instance().cost(i, j2) == s.instance().cost(i, j2));
    }
    SUBCASE("cost-table instance serializes lower-triangular rows") {
        const ChainInstance chain = generate_hurkens(2);
        const json j = scenario_to_json(chain.scenario, &chain.landmarks);
        CHECK(j.contains("costs"));
        const LoadedScenario back = scenario_from_json(j);
        REQUIRE(back.landmarks.has_value());
        CHECK(back.landmarks->injected_tour == chain.landmarks.injected_tour);
        CHECK(back.scenario.blocked() == chain.scenario.blocked());
        CHECK(back.scenario.k_bound() == chain.scenario.k_bound());
    }
    SUBCASE("malformed documents are rejected") {
        const Scenario s = generate_random_scenario(4, 0, 1);
        json j = scenario_to_json(s);
        j["format"] = "cctp-v0";
        CHECK_THROWS_AS(scenario_from_json(j), ValidationError);
        j = scenario_to_json(s);
        j.erase("points");
        CHECK_THROWS_AS(scenario_from_json(j), ValidationError);
        j = scenario_to_json(s);
        j["costs"] = json::array();
        CHECK_THROWS_AS(scenario_from_json(j), ValidationError);
    }
}

TEST_CASE("run records") {
    SUBCASE("chain run reproduces the closed-form numbers") {
        const ChainInstance chain = generate_hurkens(3);
        RunOptions options;
        options.tie = lemma_tie_policy(3, chain.scenario.n());
        options.injected_tour = chain.landmarks.injected_tour;
        const RunOutput out = run_scenario(chain.scenario, options, "chain-p3");
        CHECK(out.record.total_cost == 28.0);
        REQUIRE(out.record.optimal_cost.has_value());
        CHECK(*out.record.optimal_cost == 23.0);
        CHECK(*out.record.ratio == doctest::Approx(28.0 / 23.0).epsilon(1e-12));
        CHECK(out.record.shortcut_cost == 2.0);
        CHECK(out.record.explore_cost + out.record.return_cost == 26.0);
        CHECK_FALSE(out.record.tsp_fallback);

        const json j = record_to_json(out.record);
        CHECK(j.at("cost") == 28.0);
        CHECK(j.at("opt") == 23.0);
    }
    SUBCASE("ratio stays at least one across algorithms") {
        for (std::uint64_t seed = 50; seed < 70; ++seed) {
            const Scenario s = oracle::suite_scenario(seed);
            for (const char* algo : {"cnn", "double-tree-nn", "repeated-shortcut"}) {
                RunOptions options;
                options.algo = algo;
                const RunOutput out = run_scenario(s, options, "suite");
                REQUIRE(out.record.ratio.has_value());
                CHECK(*out.record.ratio >= 1.0 - 1e-9);
            }
        }
    }
    SUBCASE("csv rows") {
        ExperimentRecord r;
        r.scenario_id = "x";
        r.n = 5;
        r.k = 2;
        r.algo = "cnn";
        r.total_cost = 3.5;
        r.shortcut_cost = 1.5;
        r.explore_cost = 1.25;
        r.return_cost = 0.75;
        r.wall_ms = 1.0;
        CHECK(record_to_csv_row(r) == "x,5,2,cnn,3.5,,,1.5,2,1.000");
        r.optimal_cost = 3.0;
        r.ratio = 3.5 / 3.0;
        CHECK(record_to_csv_row(r).find(",3,1.1666666666666667,") != std::string::npos);
    }
}

TEST_CASE("traces replay and are deterministic") {
    const Scenario s = generate_random_scenario(10, 5, 7);
    RunOptions options;

    const RunOutput a = run_scenario(s, options, "a");
    const RunOutput b = run_scenario(s, options, "b");
    const std::string jsonl = trace_to_jsonl(a.trace);
    CHECK(jsonl == trace_to_jsonl(b.trace));

    const Trace parsed = trace_from_jsonl(jsonl);
    REQUIRE(parsed.size() == a.trace.size());
    OnlineEnvironment env(s);
    for (const TraceRecord& r : parsed) {
        CHECK(env.view().position() == r.from);
        env.move(r.to);
        CHECK(env.view().total_cost() == r.cumulative_cost);
    }
    CHECK(env.view().total_cost() == a.record.total_cost);
}

TEST_CASE("chain parameter recovery") {
    const ChainInstance chain = generate_hurkens(4);
    CHECK(infer_chain_p(chain.scenario, chain.landmarks) == 4);
    const ChainInstance bare = generate_hurkens_chain(2);
    ChainLandmarks lm = bare.landmarks;
    CHECK(infer_chain_p(bare.scenario, lm) == 2);
    const Scenario random = generate_random_scenario(9, 2, 3);
    CHECK_THROWS_AS(infer_chain_p(random, std::nullopt), ValidationError);
}

TEST_CASE("sweep reports") {
    SUBCASE("empty config yields only the header") {
        const SweepReport report = run_sweep(json::object());
        CHECK(report.csv == std::string(kCsvHeader) + "\n");
        CHECK(report.errors.empty());
    }
    SUBCASE("blocking-free rows stay within the approximation bound") {
        const json config{
            {"rows",
             {{{"kind", "random"}, {"n", 8}, {"k", 0}, {"seeds", {1, 2, 3}},
               {"algos", {"cnn"}}}}}};
        const SweepReport report = run_sweep(config);
        CHECK(report.errors.empty());
        std::istringstream in(report.csv);
        std::string line;
        std::getline(in, line);
        CHECK(line == kCsvHeader);
        int rows = 0;
        while (std::getline(in, line)) {
            if (line.rfind("aggregate", 0) == 0) continue;
            ++rows;
            const auto last = line.rfind(',');
            const auto prev = line.rfind(',', last - 1);
            (void)prev;
            std::istringstream fields(line);
            std::string field;
            for (int i = 0; i < 7; ++i) std::getline(fields, field, ',');
            CHECK(std::stod(field) <= 1.5 + 1e-9);
        }
        CHECK(rows == 3);
    }
    SUBCASE("chain rows carry the exact ratio and failures do not stop the sweep") {
        const json config{
            {"rows",
             {{{"kind", "hurkens"}, {"p", 2}, {"algos", {"cnn"}}, {"tie", "lemma"},
               {"inject_tour", true}},
              {{"kind", "random"}, {"n", 4}, {"k", 6}, {"seeds", {1}},
               {"algos", {"cnn"}}}}}};
        const SweepReport report = run_sweep(config);
        REQUIRE(report.errors.size() == 1);
        CHECK(report.errors.front().find("cannot keep graph connected") != std::string::npos);
        CHECK(report.csv.find("hurkens-p2") != std::string::npos);
        // ratio 12/11 for p=2
        CHECK(report.csv.find(std::to_string(12.0 / 11.0).substr(0, 8)) != std::string::npos);
        CHECK(report.csv.find("aggregate-max") != std::string::npos);
        CHECK(report.csv.find("aggregate-mean") != std::string::npos);
    }
    SUBCASE("reports are deterministic apart from wall time") {
        const json config{
            {"rows",
             {{{"kind", "random"}, {"n", 9}, {"k", 4}, {"seeds", {5, 6}},
               {"algos", {"cnn", "repeated-shortcut"}}},
              {{"kind", "hurkens"}, {"p", 1}, {"algos", {"cnn"}}, {"tie", "lemma"},
               {"inject_tour", true}}}}};
        const SweepReport a = run_sweep(config, 4);
        const SweepReport b = run_sweep(config, 1);
        CHECK(strip_wall_ms(a.csv) == strip_wall_ms(b.csv));
    }
}

TEST_CASE("command line") {
    fs::remove_all(kTmp);
    fs::create_directories(kTmp);
    const std::string chain_path = (kTmp / "chain3.json").string();

    SUBCASE("gen is idempotent") {
        CHECK(run_cli("gen hurkens --p 3 --out " + chain_path).code == 0);
        const std::string first = slurp(chain_path);
        CHECK(run_cli("gen hurkens --p 3 --out " + chain_path).code == 0);
        CHECK(slurp(chain_path) == first);

        const std::string rnd = (kTmp / "rnd.json").string();
        CHECK(run_cli("gen random --n 10 --k 5 --seed 7 --out " + rnd).code == 0);
        const std::string rnd_first = slurp(rnd);
        CHECK(run_cli("gen random --n 10 --k 5 --seed 7 --out " + rnd).code == 0);
        CHECK(slurp(rnd) == rnd_first);
    }
    SUBCASE("gen rejects infeasible parameters with exit code 2") {
        const CliResult r =
            run_cli("gen random --n 4 --k 6 --seed 1 --out " + (kTmp / "x.json").string());
        CHECK(r.code == 2);
        CHECK(r.output.find("cannot keep graph connected") != std::string::npos);
    }
    SUBCASE("run produces the record and byte-identical traces") {
        REQUIRE(run_cli("gen hurkens --p 3 --out " + chain_path).code == 0);
        const std::string t1 = (kTmp / "t1.jsonl").string();
        const std::string t2 = (kTmp / "t2.jsonl").string();
        const CliResult r1 = run_cli("run " + chain_path +
                                     " --algo cnn --tie lemma --inject-tour landmark"
                                     " --trace " + t1);
        REQUIRE(r1.code == 0);
        const json record = json::parse(r1.output);
        CHECK(record.at("cost") == 28.0);
        CHECK(record.at("opt") == 23.0);
        const CliResult r2 = run_cli("run " + chain_path +
                                     " --algo cnn --tie lemma --inject-tour landmark"
                                     " --trace " + t2);
        REQUIRE(r2.code == 0);
        CHECK(slurp(t1) == slurp(t2));
        CHECK(!slurp(t1).empty());
    }
    SUBCASE("lemma ties demand a chain scenario") {
        const std::string rnd = (kTmp / "rnd2.json").string();
        REQUIRE(run_cli("gen random --n 9 --k 2 --seed 3 --out " + rnd).code == 0);
        CHECK(run_cli("run " + rnd + " --tie lemma").code == 2);
    }
    SUBCASE("opt computes the exact optimum and enforces its size limit") {
        REQUIRE(run_cli("gen hurkens --p 3 --out " + chain_path).code == 0);
        const CliResult r = run_cli("opt " + chain_path);
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.output).at("optimal_cost") == 23.0);

        const std::string big = (kTmp / "big.json").string();
        REQUIRE(run_cli("gen random --n 19 --k 0 --seed 1 --out " + big).code == 0);
        CHECK(run_cli("opt " + big).code == 2);
    }
    SUBCASE("sweep writes a csv report") {
        const std::string config_path = (kTmp / "sweep.json").string();
        {
            std::ofstream out(config_path);
            out << R"({"rows":[{"kind":"random","n":8,"k":2,"seeds":[1,2],"algos":["cnn"]},)"
                << R"({"kind":"hurkens","p":2,"algos":["cnn"],"tie":"lemma","inject_tour":true}]})";
        }
        const std::string csv_path = (kTmp / "report.csv").string();
        CHECK(run_cli("sweep " + config_path + " --out " + csv_path).code == 0);
        const std::string csv = slurp(csv_path);
        CHECK(csv.rfind(kCsvHeader, 0) == 0);
        CHECK(csv.find("hurkens-p2") != std::string::npos);
    }
    SUBCASE("usage errors exit with 2") {
        CHECK(run_cli("run").code == 2);
        CHECK(run_cli("frobnicate").code == 2);
        CHECK(run_cli("run " + (kTmp / "missing.json").string()).code == 2);
    }
}
