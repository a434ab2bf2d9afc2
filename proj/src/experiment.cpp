#include "cctp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>
#include <tuple>

namespace cctp {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_ms(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << v;
    return out.str();
}

}  // namespace

RunOutput run_scenario(const Scenario& scenario, const RunOptions& options,
                       const std::string& scenario_id) {
    RunOutput out;
    out.record.scenario_id = scenario_id;
    out.record.n = scenario.n();
    out.record.k = scenario.blocked_count();
    out.record.algo = options.algo;

    const auto started = std::chrono::steady_clock::now();
    OnlineEnvironment env(scenario);

    AlgoTsp algo_tsp;
    if (options.injected_tour) {
        algo_tsp = inject_tour(*options.injected_tour);
    } else if (options.algo == "double-tree-nn") {
        algo_tsp = [](const MetricInstance& inst) { return double_tree_tour(inst); };
    } else {
        algo_tsp = christofides_with_fallback(&out.record.tsp_fallback);
    }

    if (options.algo == "repeated-shortcut") {
        const BaselineResult run = repeated_shortcut_baseline(env, algo_tsp, &out.trace);
        out.record.total_cost = run.total_cost;
        out.record.rounds = run.rounds;
        out.walk = run.walk;
        for (const TraceRecord& r : out.trace) {
            if (r.phase == "shortcut") out.record.shortcut_cost += r.cost;
            else if (r.phase == "return") out.record.return_cost += r.cost;
            else out.record.explore_cost += r.cost;
        }
    } else if (options.algo == "cnn" || options.algo == "double-tree-nn") {
        const RunResult run = compress_and_explore(env, algo_tsp, options.tie, &out.trace);
        out.record.total_cost = run.total_cost;
        out.record.shortcut_cost = run.shortcut_cost;
        out.record.explore_cost = run.explore_cost;
        out.record.return_cost = run.return_cost;
        out.walk = run.walk;
    } else {
        throw ValidationError("unknown algorithm '" + options.algo + "'");
    }

    if (options.compute_opt && scenario.n() <= kHeldKarpLimit) {
        const TspTour opt = held_karp_optimal(metric_closure(scenario), scenario.source());
        out.record.optimal_cost = opt.cost;
        if (opt.cost > 0.0) out.record.ratio = out.record.total_cost / opt.cost;
    }

    const auto finished = std::chrono::steady_clock::now();
    out.record.wall_ms =
        std::chrono::duration<double, std::milli>(finished - started).count();
    return out;
}

json record_to_json(const ExperimentRecord& r) {
    json j{{"scenario", r.scenario_id},
           {"n", r.n},
           {"k", r.k},
           {"algo", r.algo},
           {"cost", r.total_cost},
           {"shortcut_cost", r.shortcut_cost},
           {"explore_cost", r.explore_cost},
           {"return_cost", r.return_cost},
           {"tsp_fallback", r.tsp_fallback},
           {"wall_ms", r.wall_ms}};
    if (r.optimal_cost) j["opt"] = *r.optimal_cost;
    if (r.ratio) j["ratio"] = *r.ratio;
    if (r.algo == "repeated-shortcut") j["rounds"] = r.rounds;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string record_to_csv_row(const ExperimentRecord& r) {
    std::ostringstream out;
    out << r.scenario_id << ',' << r.n << ',' << r.k << ',' << r.algo << ',';
    if (r.error.empty()) {
        out << fmt_double(r.total_cost) << ','
            << (r.optimal_cost ? fmt_double(*r.optimal_cost) : "") << ','
            << (r.ratio ? fmt_double(*r.ratio) : "") << ','
            << fmt_double(r.shortcut_cost) << ','
            << fmt_double(r.explore_cost + r.return_cost) << ',' << fmt_ms(r.wall_ms);
    } else {
        out << ",,,,," << fmt_ms(r.wall_ms);
    }
    return out.str();
}

int infer_chain_p(const Scenario& scenario, const std::optional<ChainLandmarks>& landmarks) {
    const bool with_u = !landmarks || landmarks->u >= 0;
    const int chain_vertices = with_u ? scenario.n() - 1 : scenario.n();
    // chain_vertices = 2^(p+1) - 1
    for (int p = 1; p <= kMaxChainP; ++p)
        if ((2 << p) - 1 == chain_vertices) return p;
    throw ValidationError("scenario size does not match any chain instance");
}

namespace {

struct SweepTask {
    std::string kind;  // random | hurkens
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    Geometry geometry = Geometry::euclidean;
    int p = 0;
    bool inject = false;
    std::string algo;
    std::string tie;
    std::string id;
};

ExperimentRecord run_task(const SweepTask& task) {
    ExperimentRecord failed;
    failed.scenario_id = task.id;
    failed.algo = task.algo;
    try {
        RunOptions options;
        options.algo = task.algo;
        if (task.kind == "hurkens") {
            const ChainInstance chain = generate_hurkens(task.p);
            if (task.tie == "lemma")
                options.tie = lemma_tie_policy(task.p, chain.scenario.n());
            if (task.inject) options.injected_tour = chain.landmarks.injected_tour;
            return run_scenario(chain.scenario, options, task.id).record;
        }
        if (task.tie == "lemma")
            throw ValidationError("lemma tie policy needs a chain scenario");
        const Scenario scenario = generate_random_scenario(task.n, task.k, task.seed,
                                                           task.geometry);
        failed.n = scenario.n();
        failed.k = scenario.blocked_count();
        return run_scenario(scenario, options, task.id).record;
    } catch (const std::exception& e) {
        failed.error = e.what();
        return failed;
    }
}

Geometry parse_geometry(const std::string& name) {
    if (name == "euclidean") return Geometry::euclidean;
    if (name == "random-metric-closure") return Geometry::random_metric_closure;
    throw ValidationError("unknown geometry '" + name + "'");
}

std::vector<SweepTask> expand_config(const json& config) {
    std::vector<SweepTask> tasks;
    if (!config.contains("rows")) return tasks;
    for (const json& row : config.at("rows")) {
        const std::string kind = row.at("kind").get<std::string>();
        const std::string tie = row.value("tie", std::string("default"));
        const auto algos = row.at("algos").get<std::vector<std::string>>();
        if (kind == "hurkens") {
            SweepTask base;
            base.kind = kind;
            base.p = row.at("p").get<int>();
            base.n = 2 << base.p;
            base.inject = row.value("inject_tour", false);
            base.tie = tie;
            base.id = "hurkens-p" + std::to_string(base.p);
            const ChainInstance chain = generate_hurkens(base.p);
            base.k = chain.scenario.blocked_count();
            for (const std::string& algo : algos) {
                SweepTask t = base;
                t.algo = algo;
                tasks.push_back(std::move(t));
            }
        } else if (kind == "random") {
            SweepTask base;
            base.kind = kind;
            base.n = row.at("n").get<int>();
            base.k = row.at("k").get<int>();
            base.geometry = parse_geometry(row.value("geometry", std::string("euclidean")));
            base.tie = tie;
            for (const auto& seed : row.at("seeds")) {
                for (const std::string& algo : algos) {
                    SweepTask t = base;
                    t.seed = seed.get<std::uint64_t>();
                    t.algo = algo;
                    t.id = "random-n" + std::to_string(t.n) + "-k" + std::to_string(t.k) +
                           "-seed" + std::to_string(t.seed);
                    tasks.push_back(std::move(t));
                }
            }
        } else {
            throw ValidationError("unknown sweep row kind '" + kind + "'");
        }
    }
    return tasks;
}

}  // namespace

SweepReport run_sweep(const json& config, int jobs) {
    const std::vector<SweepTask> tasks = expand_config(config);
    std::vector<ExperimentRecord> records(tasks.size());

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < tasks.size(); i = cursor.fetch_add(1))
            records[i] = run_task(tasks[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    std::sort(records.begin(), records.end(),
              [](const ExperimentRecord& a, const ExperimentRecord& b) {
                  return std::tie(a.n, a.k, a.algo, a.scenario_id) <
                         std::tie(b.n, b.k, b.algo, b.scenario_id);
              });

    SweepReport report;
    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    for (const ExperimentRecord& r : records) {
        csv << record_to_csv_row(r) << '\n';
        if (!r.error.empty())
            report.errors.push_back(r.scenario_id + " (" + r.algo + "): " + r.error);
    }

    // Aggregate max/mean ratio per (n, k, algo) over rows that have one.
    for (std::size_t i = 0; i < records.size();) {
        std::size_t j = i;
        double max_ratio = 0.0;
        double sum_ratio = 0.0;
        int count = 0;
        while (j < records.size() && records[j].n == records[i].n &&
               records[j].k == records[i].k && records[j].algo == records[i].algo) {
            if (records[j].ratio) {
                max_ratio = std::max(max_ratio, *records[j].ratio);
                sum_ratio += *records[j].ratio;
                ++count;
            }
            ++j;
        }
        if (count > 0) {
            const auto& r = records[i];
            csv << "aggregate-max," << r.n << ',' << r.k << ',' << r.algo << ",,,"
                << fmt_double(max_ratio) << ",,,\n";
            csv << "aggregate-mean," << r.n << ',' << r.k << ',' << r.algo << ",,,"
                << fmt_double(sum_ratio / count) << ",,,\n";
        }
        i = j;
    }
    report.csv = csv.str();
    return report;
}

}  // namespace cctp
