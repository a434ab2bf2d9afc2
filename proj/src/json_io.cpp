#include "cctp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cctp {

using nlohmann::json;

namespace {

json landmarks_to_json(const ChainLandmarks& lm) {
    return json{{"l", lm.l}, {"r", lm.r}, {"m", lm.m}, {"u", lm.u},
                {"injected_tour", lm.injected_tour}};
}

ChainLandmarks landmarks_from_json(const json& j) {
    ChainLandmarks lm;
    lm.l = j.at("l").get<VertexId>();
    lm.r = j.at("r").get<VertexId>();
    lm.m = j.at("m").get<VertexId>();
    lm.u = j.at("u").get<VertexId>();
    lm.injected_tour = j.at("injected_tour").get<std::vector<VertexId>>();
    return lm;
}

}  // namespace

json scenario_to_json(const Scenario& scenario, const ChainLandmarks* landmarks) {
    const MetricInstance& inst = scenario.instance();
    json j;
    j["format"] = "cctp-v1";
    j["n"] = inst.n();
    j["source"] = inst.source();
    if (inst.points()) {
        json pts = json::array();
        for (const Point& p : *inst.points()) pts.push_back(json::array({p[0], p[1]}));
        j["points"] = std::move(pts);
    } else {
        // Row i (starting at vertex 1) holds cost(i, 0..i-1).
        json rows = json::array();
        for (VertexId i = 1; i < inst.n(); ++i) {
            json row = json::array();
            for (VertexId k = 0; k < i; ++k) row.push_back(inst.cost(i, k));
            rows.push_back(std::move(row));
        }
        j["costs"] = std::move(rows);
    }
    json blocked = json::array();
    for (const EdgeKey& e : scenario.blocked()) blocked.push_back(json::array({e.a, e.b}));
    j["blocked"] = std::move(blocked);
    if (scenario.k_bound()) j["k_bound"] = *scenario.k_bound();
    if (landmarks) j["landmarks"] = landmarks_to_json(*landmarks);
    return j;
}

LoadedScenario scenario_from_json(const json& j) {
    try {
        if (j.at("format").get<std::string>() != "cctp-v1")
            throw ValidationError("unsupported scenario format");
        const int n = j.at("n").get<int>();
        const VertexId source = j.at("source").get<VertexId>();
        if (n < 1) throw ValidationError("scenario has no vertices");

        const bool has_points = j.contains("points");
        const bool has_costs = j.contains("costs");
        if (has_points == has_costs)
            throw ValidationError("scenario needs exactly one of points/costs");

        std::optional<MetricInstance> instance;
        if (has_points) {
            const auto& pts = j.at("points");
            if (static_cast<int>(pts.size()) != n)
                throw ValidationError("points array has wrong length");
            std::vector<Point> points(n);
            for (int i = 0; i < n; ++i)
                points[i] = {pts[i].at(0).get<double>(), pts[i].at(1).get<double>()};
            instance = MetricInstance::from_points(std::move(points), source);
        } else {
            const auto& rows = j.at("costs");
            if (static_cast<int>(rows.size()) != n - 1)
                throw ValidationError("costs array has wrong number of rows");
            CostMatrix costs(n);
            for (VertexId i = 1; i < n; ++i) {
                const auto& row = rows[i - 1];
                if (static_cast<int>(row.size()) != i)
                    throw ValidationError("costs row has wrong length");
                for (VertexId k = 0; k < i; ++k) costs.set(i, k, row[k].get<double>());
            }
            instance = MetricInstance(std::move(costs), source);
        }

        std::vector<EdgeKey> blocked;
        for (const auto& pair : j.at("blocked")) {
            if (pair.size() != 2) throw ValidationError("blocked entry is not a pair");
            blocked.push_back(edge_key(pair[0].get<VertexId>(), pair[1].get<VertexId>()));
        }
        std::optional<int> k_bound;
        if (j.contains("k_bound")) k_bound = j.at("k_bound").get<int>();

        LoadedScenario out{Scenario(std::move(*instance), std::move(blocked), k_bound),
                           std::nullopt};
        if (j.contains("landmarks")) out.landmarks = landmarks_from_json(j.at("landmarks"));
        return out;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed scenario JSON: ") + e.what());
    }
}

LoadedScenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("cannot parse ") + path.string() + ": " + e.what());
    }
    return scenario_from_json(j);
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file " + path.string());
    out << j.dump(2) << '\n';
}

std::string trace_to_jsonl(const Trace& trace) {
    std::ostringstream out;
    for (const TraceRecord& r : trace) {
        const json j{{"phase", r.phase},
                     {"from", r.from},
                     {"to", r.to},
                     {"edge_kind", r.edge_kind},
                     {"cost", r.cost},
                     {"cumulative_cost", r.cumulative_cost}};
        out << j.dump() << '\n';
    }
    return out.str();
}

Trace trace_from_jsonl(const std::string& text) {
    Trace trace;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        trace.push_back({j.at("phase").get<std::string>(), j.at("from").get<VertexId>(),
                         j.at("to").get<VertexId>(), j.at("edge_kind").get<std::string>(),
                         j.at("cost").get<double>(), j.at("cumulative_cost").get<double>()});
    }
    return trace;
}

}  // namespace cctp
