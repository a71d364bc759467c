#pragma once

// The mViE main loop: a population of local search units, a DE recombination
// branch, the adaptive scheduler between them, and population restarts.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvie/global_search.hpp"
#include "mvie/problem.hpp"
#include "mvie/ranking.hpp"
#include "mvie/scheduler.hpp"
#include "mvie/vie_unit.hpp"

namespace mvie {

enum class Mode { Full, LocalOnly, GlobalOnly, RandomScheduler };

std::string to_string(Mode mode);
// Accepts "full", "local-only", "global-only", "random-scheduler".
Mode parse_mode(const std::string& text);

class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SchedulerParams {
    double c_alpha = 0.1;
    double beta_R = 0.05;
    double L = 0.18;
    bool operator==(const SchedulerParams&) const = default;
};

struct RunConfig {
    std::string problem;
    std::size_t pop_size = 40;
    std::optional<std::uint64_t> max_nfes;  // family default when unset
    double target_accuracy = 1e-4;
    std::uint64_t seed = 1;
    Mode mode = Mode::Full;
    DEParams de_params;
    SchedulerParams scheduler;
    bool trace_enabled = false;
    // When set, the run continues past the first success so that every
    // checkpoint below the budget is recorded.
    bool capture_checkpoints = false;
    std::vector<std::uint64_t> checkpoints{5000, 50000, 500000};
};

std::uint64_t default_budget(const ProblemSpec& problem);

struct CheckpointRecord {
    std::uint64_t nfes = 0;
    double error = 0;  // f_best - f*
    std::array<int, 3> violated_counts{};  // g_j > 1, > 0.01, > 1e-4
    double mean_violation = 0;  // violation_best / m
    bool operator==(const CheckpointRecord&) const = default;
};

struct TraceRecord {
    std::uint64_t nfes = 0;
    Branch branch = Branch::Local;
    double f_best = 0;
    double violation_best = 0;
    double p_succ_local = 0;
    double p_succ_global = 0;
    double freq_local = 0;  // probability of picking the local branch at this point
    bool operator==(const TraceRecord&) const = default;
};

struct RunResult {
    std::string problem;
    std::uint64_t seed = 0;
    Mode mode = Mode::Full;
    Vector best_x;
    RankedSolution best;
    std::uint64_t nfes_used = 0;
    std::uint64_t max_nfes = 0;
    std::optional<std::uint64_t> nfes_to_success;
    bool success = false;
    std::vector<CheckpointRecord> checkpoints;
    std::uint64_t restarts = 0;
    std::uint64_t local_steps = 0;
    std::uint64_t global_steps = 0;
    std::uint64_t skipped_downdates = 0;
    std::optional<std::vector<TraceRecord>> trace;

    bool operator==(const RunResult& o) const;
};

// Called after every local step with the stepped unit's state before and
// after the step. Used by tests that audit per-unit invariants.
using LocalStepObserver = std::function<void(const VieUnit& before, const VieUnit& after, const StepOutcome&)>;

struct RunHooks {
    LocalStepObserver on_local_step;
};

void validate(const RunConfig& config);

RunResult run(const RunConfig& config, const RunHooks& hooks = {});

// First active unit in deb order; throws std::logic_error when none is active.
std::size_t select_local_unit(std::span<const VieUnit> population);

bool check_restart(std::span<const VieUnit> population, const RankedSolution& best);

SchedulerPolicy apply_mode(Mode mode);

CheckpointRecord make_checkpoint(const ProblemSpec& problem, std::uint64_t nfes, const Evaluation& best);

}  // namespace mvie
