#pragma once

// Seeded trial batteries over plan_static, in the column layout
// algorithm, population, iterations, best cost, time.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swarmroute/planner.hpp"

namespace swarmroute {

struct BenchRecord {
    std::string algorithm;
    std::size_t population = 0;
    std::size_t iterations = 0;
    double best_cost = 0.0;
    double time_seconds = 0.0;
    std::uint64_t seed = 0;
    std::string scenario_id;
    /// Set when the trial threw; best_cost is NaN in that case.
    std::optional<std::string> failure;

    bool failed() const { return failure.has_value(); }
};

inline constexpr const char* kBenchCsvHeader = "algorithm,population,iterations,best_cost,time_seconds,seed,scenario_id";

/// One plan_static run; errors become a record with `failure` set.
BenchRecord run_trial(const Scenario& scenario, const AlgoParams& algo, const CostParams& cost, std::uint64_t seed);

/// Every algorithm on seeds base_seed .. base_seed + num_seeds - 1, in
/// (algorithm, seed) order. `threads` > 1 runs trials concurrently; the
/// returned order does not change.
std::vector<BenchRecord> run_suite(const Scenario& scenario, const std::vector<Algorithm>& algorithms,
                                   const AlgoParams& base, const CostParams& cost, std::size_t num_seeds,
                                   std::uint64_t base_seed, std::size_t threads = 1);

struct Stats {
    double median = 0.0;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

struct AlgorithmSummary {
    std::string algorithm;
    std::size_t trials = 0;
    std::size_t failures = 0;
    Stats best_cost;
    Stats time_seconds;
};

/// Paired sign test over seeds both algorithms completed.
struct PairwiseVerdict {
    std::string first;
    std::string second;
    std::size_t first_wins = 0;   // first had the lower best_cost
    std::size_t second_wins = 0;
    std::size_t ties = 0;
    double p_value = 1.0;         // two-sided
    /// "<", ">" or "=" comparing the medians of first and second.
    std::string median_order;
};

struct BenchSummary {
    std::string scenario_id;
    std::size_t population = 0;
    std::size_t iterations = 0;
    std::vector<AlgorithmSummary> algorithms;  // in order of first appearance
    std::vector<PairwiseVerdict> pairwise;
};

Stats describe(std::vector<double> values);

/// Two-sided exact sign test: min(1, 2 P[X <= min(wins, losses)]),
/// X ~ Binomial(wins + losses, 1/2). Returns 1 when there are no decisive pairs.
double sign_test_p_value(std::size_t wins, std::size_t losses);

/// Throws InvalidArgument on an empty set or on records that differ in
/// scenario_id, population or iterations.
BenchSummary summarize(const std::vector<BenchRecord>& records);

/// %.9g, with "nan"/"inf" spelled out.
std::string format_real(double value);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::string summary_to_json(const BenchSummary& summary);

}  // namespace swarmroute
