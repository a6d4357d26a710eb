// swarmroute: plan, simulate and benchmark swarm route planners.
//
// Exit status: 0 success, 1 invalid arguments, 2 scenario errors,
// 3 runtime failures. Diagnostics go to stderr; data goes to --out or stdout.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swarmroute/bench.hpp"
#include "swarmroute/errors.hpp"
#include "swarmroute/planner.hpp"
#include "swarmroute/scenario_io.hpp"
#include "swarmroute/simulate.hpp"

namespace fs = std::filesystem;
using namespace swarmroute;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitScenario = 2;
constexpr int kExitRuntime = 3;

struct CommonArgs {
    std::string scenario;
    std::string algo;
    std::size_t pop = 0;
    std::size_t iters = 0;
    std::uint64_t seed = 1;
    std::string out;
    std::string json_out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bare name such as "static_demo" resolves against the bundled scenarios.
fs::path resolve_scenario(const std::string& arg) {
    const fs::path direct(arg);
    if (fs::exists(direct)) {
        return direct;
    }
    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("SWARMROUTE_SCENARIO_DIR")) {
        dirs.emplace_back(env);
    }
    dirs.emplace_back(SWARMROUTE_SCENARIO_DIR);
    for (const auto& dir : dirs) {
        for (const auto& candidate : {dir / arg, dir / (arg + ".json")}) {
            if (fs::exists(candidate)) {
                return candidate;
            }
        }
    }
    return direct;
}

AlgoParams algo_params(const CommonArgs& args, const ScenarioFile& file) {
    AlgoParams params;
    if (!args.algo.empty()) {
        try {
            params.algorithm = parse_algorithm(args.algo);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    } else if (file.defaults.algorithm) {
        params.algorithm = *file.defaults.algorithm;
    }
    params.population = args.pop ? args.pop : file.defaults.population.value_or(20);
    params.iterations = args.iters ? args.iters : file.defaults.iterations.value_or(25);
    return params;
}

// Sidecar JSON path: explicit --json, else <out> with a .json extension.
std::optional<fs::path> sidecar_path(const CommonArgs& args, const char* suffix) {
    if (!args.json_out.empty()) {
        return fs::path(args.json_out);
    }
    if (args.out.empty()) {
        return std::nullopt;
    }
    fs::path p(args.out);
    p.replace_extension(suffix);
    return p;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

void emit(const CommonArgs& args, const std::string& data) {
    if (args.out.empty()) {
        std::cout << data;
    } else {
        write_text(args.out, data);
    }
}

nlohmann::ordered_json real(double v) {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

int cmd_plan(const CommonArgs& args) {
    const ScenarioFile file = load_scenario_file(resolve_scenario(args.scenario));
    const AlgoParams algo = algo_params(args, file);
    const PlanResult plan = plan_static(file.scenario, algo, cost_params_for(file), args.seed);

    std::ostringstream csv;
    csv << "x,y,z\n";
    for (const auto& p : plan.route.points) {
        csv << format_real(p.x) << ',' << format_real(p.y) << ',' << format_real(p.z) << '\n';
    }
    emit(args, csv.str());

    if (const auto path = sidecar_path(args, ".json")) {
        nlohmann::ordered_json j;
        j["scenario_id"] = file.scenario.id;
        j["algorithm"] = std::string(algorithm_name(algo.algorithm));
        j["population"] = algo.population;
        j["iterations"] = algo.iterations;
        j["seed"] = args.seed;
        j["cost"] = real(plan.cost);
        j["initial_best_cost"] = real(plan.history.initial_best_fitness);
        j["evaluations"] = plan.history.evaluations_used;
        j["history"] = plan.history.best_fitness_per_iteration;
        j["wall_time_seconds"] = plan.wall_time_seconds;
        write_text(*path, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_simulate(const CommonArgs& args, double max_time) {
    const ScenarioFile file = load_scenario_file(resolve_scenario(args.scenario));
    const AlgoParams algo = algo_params(args, file);
    SimOptions options;
    options.max_sim_time = max_time;
    options.lookahead_factor = file.defaults.lookahead_factor.value_or(options.lookahead_factor);
    options.clearance = file.defaults.clearance.value_or(options.clearance);
    const SimTrace trace = simulate_dynamic(file.scenario, algo, cost_params_for(file), args.seed, options);

    std::ostringstream csv;
    csv << "t,x,y,z,event\n";
    for (const auto& s : trace.samples) {
        csv << format_real(s.t) << ',' << format_real(s.position.x) << ',' << format_real(s.position.y) << ','
            << format_real(s.position.z) << ',' << trace_event_name(s.event) << '\n';
    }
    emit(args, csv.str());

    if (const auto path = sidecar_path(args, ".json")) {
        nlohmann::ordered_json j;
        j["scenario_id"] = file.scenario.id;
        j["algorithm"] = std::string(algorithm_name(algo.algorithm));
        j["seed"] = args.seed;
        j["outcome"] = std::string(outcome_name(trace.outcome));
        j["collided"] = trace.collided();
        j["end_time"] = trace.samples.back().t;
        auto& replans = j["replans"] = nlohmann::ordered_json::array();
        for (const auto& r : trace.replans) {
            replans.push_back({{"t", r.t},
                               {"trigger", r.trigger == ReplanTrigger::NewObstacleSensed ? "new_obstacle_sensed"
                                                                                         : "predicted_collision"}});
        }
        write_text(*path, j.dump(2) + "\n");
    }
    std::cerr << "outcome: " << outcome_name(trace.outcome) << ", replans: " << trace.replans.size() << '\n';
    return 0;
}

int cmd_bench(const CommonArgs& args, const std::string& algos, std::size_t trials, std::size_t threads) {
    const ScenarioFile file = load_scenario_file(resolve_scenario(args.scenario));
    std::vector<Algorithm> list;
    std::stringstream ss(algos);
    for (std::string name; std::getline(ss, name, ',');) {
        try {
            list.push_back(parse_algorithm(name));
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }
    if (list.empty()) {
        throw UsageError("--algos needs at least one algorithm");
    }
    const AlgoParams base = algo_params(args, file);
    const auto records = run_suite(file.scenario, list, base, cost_params_for(file), trials, args.seed, threads);

    std::ostringstream csv;
    write_bench_csv(csv, records);
    emit(args, csv.str());
    if (const auto path = sidecar_path(args, ".json")) {
        write_text(*path, summary_to_json(summarize(records)));
    }
    for (const auto& r : records) {
        if (r.failed()) {
            std::cerr << "trial " << r.algorithm << " seed " << r.seed << " failed: " << *r.failure << '\n';
        }
    }
    return 0;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--scenario", args.scenario, "Scenario file, or the name of a bundled scenario")->required();
    cmd->add_option("--algo", args.algo, "Optimizer: ssa, pso or fa");
    cmd->add_option("--pop", args.pop, "Population size")->check(CLI::PositiveNumber);
    cmd->add_option("--iters", args.iters, "Iterations")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "Random seed (bench: first seed)");
    cmd->add_option("--out", args.out, "CSV output path (default: stdout)");
    cmd->add_option("--json", args.json_out, "JSON output path (default: --out with a .json extension)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swarm-intelligence 3D route planning: SSA, PSO and FA"};
    app.require_subcommand(1);

    CommonArgs plan_args;
    auto* plan = app.add_subcommand("plan", "Plan a route over the fully known scenario");
    add_common(plan, plan_args);

    CommonArgs sim_args;
    double max_time = 600.0;
    auto* simulate = app.add_subcommand("simulate", "Run the sense / plan / avoid loop");
    add_common(simulate, sim_args);
    simulate->add_option("--max-time", max_time, "Simulated time limit in seconds")->check(CLI::NonNegativeNumber);

    CommonArgs bench_args;
    std::string algos = "ssa,pso,fa";
    std::size_t trials = 30;
    std::size_t threads = 1;
    auto* bench = app.add_subcommand("bench", "Seeded trial battery with summary statistics");
    add_common(bench, bench_args);
    bench->add_option("--algos", algos, "Comma-separated optimizers");
    bench->add_option("--trials", trials, "Seeds per optimizer")->check(CLI::PositiveNumber);
    bench->add_option("--threads", threads, "Concurrent trials")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*plan) return cmd_plan(plan_args);
        if (*simulate) return cmd_simulate(sim_args, max_time);
        if (*bench) return cmd_bench(bench_args, algos, trials, threads);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << '\n';
        return kExitScenario;
    } catch (const InvalidScenario& e) {
        std::cerr << "scenario error: " << e.what() << '\n';
        return kExitScenario;
    } catch (const Unreachable& e) {
        std::cerr << "unreachable: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
