#include "swarmroute/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "swarmroute/errors.hpp"

namespace swarmroute {

BenchRecord run_trial(const Scenario& scenario, const AlgoParams& algo, const CostParams& cost, std::uint64_t seed) {
    BenchRecord record;
    record.algorithm = std::string(algorithm_name(algo.algorithm));
    record.population = algo.population;
    record.iterations = algo.iterations;
    record.seed = seed;
    record.scenario_id = scenario.id;
    try {
        const PlanResult plan = plan_static(scenario, algo, cost, seed);
        record.best_cost = plan.cost;
        record.time_seconds = plan.wall_time_seconds;
    } catch (const std::exception& e) {
        record.best_cost = std::numeric_limits<double>::quiet_NaN();
        record.time_seconds = 0.0;
        record.failure = e.what();
    }
    return record;
}

std::vector<BenchRecord> run_suite(const Scenario& scenario, const std::vector<Algorithm>& algorithms,
                                   const AlgoParams& base, const CostParams& cost, std::size_t num_seeds,
                                   std::uint64_t base_seed, std::size_t threads) {
    if (num_seeds == 0) {
        throw InvalidArgument("run_suite: num_seeds must be at least 1");
    }
    const std::size_t total = algorithms.size() * num_seeds;
    std::vector<BenchRecord> records(total);
    const auto run_one = [&](std::size_t index) {
        AlgoParams params = base;
        params.algorithm = algorithms[index / num_seeds];
        records[index] = run_trial(scenario, params, cost, base_seed + index % num_seeds);
    };

    threads = std::max<std::size_t>(1, std::min(threads, total));
    if (threads == 1) {
        for (std::size_t i = 0; i < total; ++i) {
            run_one(i);
        }
        return records;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < total; i = cursor++) {
                run_one(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return records;
}

Stats describe(std::vector<double> values) {
    if (values.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {nan, nan, nan, nan};
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    Stats s;
    s.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    s.min = values.front();
    s.max = values.back();
    return s;
}

double sign_test_p_value(std::size_t wins, std::size_t losses) {
    const std::size_t n = wins + losses;
    if (n == 0) {
        return 1.0;
    }
    const std::size_t k_max = std::min(wins, losses);
    // term_k = C(n, k) / 2^n, built incrementally.
    double term = std::pow(0.5, static_cast<double>(n));
    double tail = term;
    for (std::size_t k = 0; k < k_max; ++k) {
        term = term * static_cast<double>(n - k) / static_cast<double>(k + 1);
        tail += term;
    }
    return std::min(1.0, 2.0 * tail);
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
    if (records.empty()) {
        throw InvalidArgument("summarize: no records");
    }
    BenchSummary summary;
    summary.scenario_id = records.front().scenario_id;
    summary.population = records.front().population;
    summary.iterations = records.front().iterations;
    for (const auto& r : records) {
        if (r.scenario_id != summary.scenario_id || r.population != summary.population ||
            r.iterations != summary.iterations) {
            throw InvalidArgument("summarize: records mix scenario/population/iterations (" + r.scenario_id + ", " +
                                  std::to_string(r.population) + ", " + std::to_string(r.iterations) + ")");
        }
    }

    // Algorithm order is sorted by name so the summary does not depend on
    // record order.
    std::map<std::string, std::map<std::uint64_t, double>> costs;
    std::map<std::string, std::vector<double>> times;
    std::map<std::string, std::size_t> failures;
    for (const auto& r : records) {
        costs[r.algorithm];
        if (r.failed()) {
            ++failures[r.algorithm];
            continue;
        }
        auto [it, inserted] = costs[r.algorithm].emplace(r.seed, r.best_cost);
        if (!inserted) {
            throw InvalidArgument("summarize: duplicate seed " + std::to_string(r.seed) + " for " + r.algorithm);
        }
        times[r.algorithm].push_back(r.time_seconds);
    }

    for (const auto& [name, by_seed] : costs) {
        AlgorithmSummary a;
        a.algorithm = name;
        a.failures = failures[name];
        a.trials = by_seed.size() + a.failures;
        std::vector<double> values;
        for (const auto& [seed, c] : by_seed) {
            values.push_back(c);
        }
        a.best_cost = describe(std::move(values));
        a.time_seconds = describe(times[name]);
        summary.algorithms.push_back(std::move(a));
    }

    for (std::size_t i = 0; i < summary.algorithms.size(); ++i) {
        for (std::size_t k = i + 1; k < summary.algorithms.size(); ++k) {
            PairwiseVerdict v;
            v.first = summary.algorithms[i].algorithm;
            v.second = summary.algorithms[k].algorithm;
            const auto& a = costs[v.first];
            const auto& b = costs[v.second];
            for (const auto& [seed, ca] : a) {
                const auto it = b.find(seed);
                if (it == b.end()) {
                    continue;
                }
                if (ca < it->second) {
                    ++v.first_wins;
                } else if (it->second < ca) {
                    ++v.second_wins;
                } else {
                    ++v.ties;
                }
            }
            v.p_value = sign_test_p_value(v.first_wins, v.second_wins);
            const double ma = summary.algorithms[i].best_cost.median;
            const double mb = summary.algorithms[k].best_cost.median;
            v.median_order = ma < mb ? "<" : (mb < ma ? ">" : "=");
            summary.pairwise.push_back(std::move(v));
        }
    }
    return summary;
}

std::string format_real(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.algorithm << ',' << r.population << ',' << r.iterations << ',' << format_real(r.best_cost) << ','
            << format_real(r.time_seconds) << ',' << r.seed << ',' << r.scenario_id << '\n';
    }
}

namespace {

nlohmann::ordered_json stats_json(const Stats& s) {
    // NaN is not representable in JSON; an all-failed algorithm reports null.
    const auto num = [](double v) -> nlohmann::ordered_json {
        return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
    };
    return {{"median", num(s.median)}, {"mean", num(s.mean)}, {"min", num(s.min)}, {"max", num(s.max)}};
}

}  // namespace

std::string summary_to_json(const BenchSummary& summary) {
    nlohmann::ordered_json j;
    j["scenario_id"] = summary.scenario_id;
    j["population"] = summary.population;
    j["iterations"] = summary.iterations;
    auto& algos = j["algorithms"] = nlohmann::ordered_json::array();
    for (const auto& a : summary.algorithms) {
        algos.push_back({{"algorithm", a.algorithm},
                         {"trials", a.trials},
                         {"failures", a.failures},
                         {"best_cost", stats_json(a.best_cost)},
                         {"time_seconds", stats_json(a.time_seconds)}});
    }
    auto& pairs = j["pairwise"] = nlohmann::ordered_json::array();
    for (const auto& v : summary.pairwise) {
        pairs.push_back({{"first", v.first},
                         {"second", v.second},
                         {"first_wins", v.first_wins},
                         {"second_wins", v.second_wins},
                         {"ties", v.ties},
                         {"sign_test_p", v.p_value},
                         {"median_order", v.median_order}});
    }
    return j.dump(2) + "\n";
}

}  // namespace swarmroute
