#pragma once

// cctp-v1 scenario files and JSONL run traces.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "cctp/algorithm.hpp"
#include "cctp/lowerbound.hpp"
#include "cctp/scenario.hpp"

namespace cctp {

// { "format": "cctp-v1", "n": int, "source": int,
//   "points": [[x,y],...] | "costs": lower-triangular rows (exactly one),
//   "blocked": [[i,j],...] with i<j, "k_bound": int optional,
//   "landmarks": {l,r,m,u,injected_tour} optional }
nlohmann::json scenario_to_json(const Scenario& scenario,
                                const ChainLandmarks* landmarks = nullptr);

struct LoadedScenario {
    Scenario scenario;
    std::optional<ChainLandmarks> landmarks;
};

LoadedScenario scenario_from_json(const nlohmann::json& j);

LoadedScenario load_scenario_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

std::string trace_to_jsonl(const Trace& trace);
Trace trace_from_jsonl(const std::string& text);

}  // namespace cctp
