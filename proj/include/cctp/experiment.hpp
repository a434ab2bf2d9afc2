#pragma once

// Experiment harness shared by the CLI and the integration tests: single
// runs with records and traces, plus the sweep driver with CSV reports.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cctp/algorithm.hpp"
#include "cctp/generate.hpp"
#include "cctp/lowerbound.hpp"

namespace cctp {

struct ExperimentRecord {
    std::string scenario_id;
    int n = 0;
    int k = 0;
    std::string algo;
    double total_cost = 0.0;
    std::optional<double> optimal_cost;
    std::optional<double> ratio;
    double shortcut_cost = 0.0;
    double explore_cost = 0.0;
    double return_cost = 0.0;
    bool tsp_fallback = false;
    int rounds = 0;  // repeated-shortcut only
    double wall_ms = 0.0;
    std::string error;  // non-empty when the run failed (sweep keeps going)
};

struct RunOptions {
    std::string algo = "cnn";  // cnn | double-tree-nn | repeated-shortcut
    TiePolicy tie;
    std::optional<std::vector<VertexId>> injected_tour;
    bool compute_opt = true;  // Held-Karp offline optimum when n allows it
};

struct RunOutput {
    ExperimentRecord record;
    Trace trace;
    Walk walk;
};

RunOutput run_scenario(const Scenario& scenario, const RunOptions& options,
                       const std::string& scenario_id);

nlohmann::json record_to_json(const ExperimentRecord& record);

inline constexpr const char* kCsvHeader =
    "scenario,n,k,algo,cost,opt,ratio,shortcut_cost,explore_cost,wall_ms";

// explore_cost column covers exploration plus the return leg.
std::string record_to_csv_row(const ExperimentRecord& record);

// Recovers the chain parameter p of a generated chain scenario; used to
// rebuild the lemma tie policy from a scenario file.
int infer_chain_p(const Scenario& scenario, const std::optional<ChainLandmarks>& landmarks);

struct SweepReport {
    std::string csv;
    std::vector<std::string> errors;
};

// Config: {"rows": [
//   {"kind":"random","n":..,"k":..,"seeds":[..],"algos":[..],
//    "geometry":"euclidean"|"random-metric-closure","tie":"default"},
//   {"kind":"hurkens","p":..,"algos":[..],"tie":"default"|"lemma",
//    "inject_tour":bool} ]}
// Rows run concurrently; the CSV is sorted by (n, k, algo, scenario) and
// followed by aggregate-max / aggregate-mean ratio rows per (n, k, algo).
SweepReport run_sweep(const nlohmann::json& config, int jobs = 0);

}  // namespace cctp
