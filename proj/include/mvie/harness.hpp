#pragma once

// Multi-run experiments, ablation comparison and parameter sweeps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvie/engine.hpp"

namespace mvie {

struct Summary {
    double best = 0;
    double median = 0;
    double worst = 0;
    double mean = 0;
    double std = 0;  // sample standard deviation; 0 when undefined
    bool std_defined = false;
    bool operator==(const Summary&) const = default;
};

// Order statistics of a non-empty sample. "best" is the minimum.
Summary summarize(std::vector<double> values);

struct CheckpointSummary {
    std::uint64_t nfes = 0;
    Summary error;
    std::array<int, 3> median_violated_counts{};  // of the median run
    double median_mean_violation = 0;
    std::size_t runs = 0;
    bool operator==(const CheckpointSummary&) const = default;
};

struct ExperimentReport {
    std::string problem;
    Mode mode = Mode::Full;
    std::size_t runs = 0;
    std::uint64_t seed0 = 0;
    std::optional<Summary> nfes_stats;  // successful runs only
    double success_rate = 0;
    std::vector<CheckpointSummary> error_table;
    RankedSolution best;  // best over all runs, deb order
    Vector best_x;
    RunConfig config;  // echo; seed is seed0
    std::vector<RunResult> per_run;
};

// Runs every config; results come back in input order whatever the thread
// count. threads = 0 picks the hardware concurrency.
std::vector<RunResult> run_batch(const std::vector<RunConfig>& configs, unsigned threads = 0);

// Seeds seed0 .. seed0 + runs - 1, everything else from `base`.
ExperimentReport run_experiment(const RunConfig& base, std::size_t runs, std::uint64_t seed0, unsigned threads = 0);

ExperimentReport aggregate(const RunConfig& base, std::uint64_t seed0, std::vector<RunResult> results);

struct AblationRow {
    Mode mode = Mode::Full;
    double total_nfes = 0;  // failures charged the full budget
    double mean_success_rate = 0;
    double scaled_nfes = 0;  // mean over problems of median NFES / full-mode median NFES
    std::vector<ExperimentReport> per_problem;
};

struct AblationReport {
    std::vector<std::string> problems;
    std::size_t runs = 0;
    std::uint64_t seed0 = 0;
    std::vector<AblationRow> rows;  // full, local-only, global-only, random-scheduler
};

// Median NFES over successful runs, or the budget when no run succeeded.
double charged_median_nfes(const ExperimentReport& report);

AblationReport ablation_report(const std::vector<std::string>& problems, std::size_t runs, std::uint64_t seed0,
                               const RunConfig& base = {}, unsigned threads = 0);

struct SweepGrid {
    std::vector<double> c_alpha;
    std::vector<double> beta_R;
    std::vector<double> L;
    std::vector<double> F;
    std::vector<double> CR;
    std::vector<std::size_t> pop_size;
};

struct SweepSetting {
    double c_alpha = 0.1;
    double beta_R = 0.05;
    double L = 0.18;
    double F = 0.5;
    double CR = 0.9;
    std::size_t pop_size = 40;
    bool operator==(const SweepSetting&) const = default;
};

struct SweepRow {
    SweepSetting setting;
    double mean_success_rate = 0;  // averaged over repetitions
    double mean_nfes_factor = 0;
    std::vector<double> rank_sums;  // one per repetition
    double rank_sum = 0;            // mean over repetitions
    double rank_sum_std = 0;
};

struct SweepReport {
    std::vector<std::string> problems;
    std::size_t runs = 0;
    std::size_t repetitions = 0;
    std::vector<SweepRow> rows;  // ascending rank sum, grid order on ties
    std::vector<std::string> warnings;
};

// Cartesian product; an empty axis contributes its default value only.
std::vector<SweepSetting> expand_grid(const SweepGrid& grid, const RunConfig& base = {});

// Average ranks (1 = best) of `values`; larger is better when `descending`.
std::vector<double> average_ranks(const std::vector<double>& values, bool descending);

// Median NFES to success per problem of the reference algorithm.
using ReferenceTable = std::map<std::string, double>;
const ReferenceTable& default_reference_table();

SweepReport parameter_sweep(const SweepGrid& grid, const std::vector<std::string>& problems, std::size_t runs,
                            std::size_t repetitions, const ReferenceTable& reference = default_reference_table(),
                            const RunConfig& base = {}, std::uint64_t seed0 = 1, unsigned threads = 0);

}  // namespace mvie
