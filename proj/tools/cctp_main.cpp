// cctp command line: scenario generation, algorithm runs, offline optima
// and sweep reports. Exit codes: 0 success, 1 internal/contract error,
// 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cctp/experiment.hpp"
#include "cctp/json_io.hpp"

namespace {

using nlohmann::json;

struct GenRandomArgs {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string geometry = "euclidean";
    std::string out;
};

struct GenHurkensArgs {
    int p = 0;
    std::string out;
};

struct RunArgs {
    std::string scenario_path;
    std::string algo = "cnn";
    std::string tie = "default";
    std::string inject_tour;  // "landmark" or comma-separated vertex list
    std::string trace_path;
    std::string record_path;
};

std::vector<cctp::VertexId> parse_vertex_list(const std::string& text) {
    std::vector<cctp::VertexId> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(static_cast<cctp::VertexId>(std::stol(item)));
    return out;
}

int cmd_gen_random(const GenRandomArgs& args) {
    const cctp::Geometry geometry = args.geometry == "euclidean"
                                        ? cctp::Geometry::euclidean
                                        : cctp::Geometry::random_metric_closure;
    const cctp::Scenario scenario =
        cctp::generate_random_scenario(args.n, args.k, args.seed, geometry);
    cctp::write_json_file(args.out, cctp::scenario_to_json(scenario));
    std::cout << "wrote " << args.out << " (n=" << scenario.n()
              << ", blocked=" << scenario.blocked_count() << ")\n";
    return 0;
}

int cmd_gen_hurkens(const GenHurkensArgs& args) {
    const cctp::ChainInstance chain = cctp::generate_hurkens(args.p);
    cctp::write_json_file(args.out, cctp::scenario_to_json(chain.scenario, &chain.landmarks));
    std::cout << "wrote " << args.out << " (n=" << chain.scenario.n()
              << ", blocked=" << chain.scenario.blocked_count() << ")\n";
    return 0;
}

int cmd_run(const RunArgs& args) {
    const cctp::LoadedScenario loaded = cctp::load_scenario_file(args.scenario_path);

    cctp::RunOptions options;
    options.algo = args.algo;
    if (args.tie == "lemma") {
        const int p = cctp::infer_chain_p(loaded.scenario, loaded.landmarks);
        options.tie = cctp::lemma_tie_policy(p, loaded.scenario.n());
    }
    if (!args.inject_tour.empty()) {
        if (args.inject_tour == "landmark") {
            if (!loaded.landmarks || loaded.landmarks->injected_tour.empty())
                throw cctp::ValidationError("scenario file carries no landmark tour");
            options.injected_tour = loaded.landmarks->injected_tour;
        } else {
            options.injected_tour = parse_vertex_list(args.inject_tour);
        }
    }

    std::string id = std::filesystem::path(args.scenario_path).stem().string();
    const cctp::RunOutput out = cctp::run_scenario(loaded.scenario, options, id);

    if (!args.trace_path.empty()) {
        std::ofstream trace_file(args.trace_path);
        if (!trace_file)
            throw cctp::ValidationError("cannot open trace file " + args.trace_path);
        trace_file << cctp::trace_to_jsonl(out.trace);
    }
    const json record = cctp::record_to_json(out.record);
    if (!args.record_path.empty()) cctp::write_json_file(args.record_path, record);
    std::cout << record.dump(2) << '\n';
    return 0;
}

int cmd_opt(const std::string& scenario_path) {
    const cctp::LoadedScenario loaded = cctp::load_scenario_file(scenario_path);
    if (loaded.scenario.n() > cctp::kHeldKarpLimit)
        throw cctp::SizeError("scenario too large for the exact oracle (n=" +
                              std::to_string(loaded.scenario.n()) + " > " +
                              std::to_string(cctp::kHeldKarpLimit) + ")");
    const cctp::TspTour opt = cctp::held_karp_optimal(cctp::metric_closure(loaded.scenario),
                                                      loaded.scenario.source());
    json j{{"scenario", std::filesystem::path(scenario_path).stem().string()},
           {"n", loaded.scenario.n()},
           {"k", loaded.scenario.blocked_count()},
           {"optimal_cost", opt.cost},
           {"order", opt.order}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path, int jobs) {
    std::ifstream in(config_path);
    if (!in) throw cctp::ValidationError("cannot open config file " + config_path);
    json config;
    try {
        in >> config;
    } catch (const json::exception& e) {
        throw cctp::ValidationError(std::string("cannot parse config: ") + e.what());
    }
    const cctp::SweepReport report = cctp::run_sweep(config, jobs);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw cctp::ValidationError("cannot open report file " + out_path);
        out << report.csv;
        std::cout << "wrote " << out_path << '\n';
    } else {
        std::cout << report.csv;
    }
    for (const std::string& err : report.errors) std::cerr << "row failed: " << err << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-CCTP simulator: online covering tours under blocked-edge uncertainty"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a scenario file");
    gen->require_subcommand(1);

    GenRandomArgs gr;
    auto* gen_random = gen->add_subcommand("random", "seeded random scenario");
    gen_random->add_option("--n", gr.n, "vertex count")->required();
    gen_random->add_option("--k", gr.k, "blocked edge count")->required();
    gen_random->add_option("--seed", gr.seed, "rng seed")->required();
    gen_random->add_option("--geometry", gr.geometry, "euclidean|random-metric-closure")
        ->check(CLI::IsMember({"euclidean", "random-metric-closure"}));
    gen_random->add_option("--out", gr.out, "output path")->required();

    GenHurkensArgs gh;
    auto* gen_hurkens = gen->add_subcommand("hurkens", "adversarial triangle chain");
    gen_hurkens->add_option("--p", gh.p, "chain parameter (1..6)")->required();
    gen_hurkens->add_option("--out", gh.out, "output path")->required();

    RunArgs ra;
    auto* run = app.add_subcommand("run", "run an algorithm through the online environment");
    run->add_option("scenario", ra.scenario_path, "scenario file")->required();
    run->add_option("--algo", ra.algo, "cnn|double-tree-nn|repeated-shortcut")
        ->check(CLI::IsMember({"cnn", "double-tree-nn", "repeated-shortcut"}));
    run->add_option("--tie", ra.tie, "default|lemma")
        ->check(CLI::IsMember({"default", "lemma"}));
    run->add_option("--inject-tour", ra.inject_tour,
                    "'landmark' or comma-separated vertex order");
    run->add_option("--trace", ra.trace_path, "write a JSONL move trace here");
    run->add_option("--record", ra.record_path, "write the record JSON here");

    std::string opt_path;
    auto* opt = app.add_subcommand("opt", "exact offline optimum via Held-Karp");
    opt->add_option("scenario", opt_path, "scenario file")->required();

    std::string sweep_config;
    std::string sweep_out;
    int sweep_jobs = 0;
    auto* sweep = app.add_subcommand("sweep", "run a config of experiments, emit CSV");
    sweep->add_option("config", sweep_config, "sweep config JSON")->required();
    sweep->add_option("--out", sweep_out, "CSV output path (stdout if omitted)");
    sweep->add_option("--jobs", sweep_jobs, "worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen_random->parsed()) return cmd_gen_random(gr);
        if (gen_hurkens->parsed()) return cmd_gen_hurkens(gh);
        if (run->parsed()) return cmd_run(ra);
        if (opt->parsed()) return cmd_opt(opt_path);
        if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_out, sweep_jobs);
    } catch (const cctp::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cctp::SizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cctp::GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
