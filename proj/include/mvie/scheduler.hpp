#pragma once

// Adaptive choice between a local step and a global recombination.

#include <cstdint>

#include "mvie/rng.hpp"

namespace mvie {

enum class Branch { Local, Global, Both };

enum class SchedulerPolicy {
    Adaptive,  // success-probability driven choice
    Random,    // fair coin after warmup
    LocalOnly,
    GlobalOnly,
};

struct SchedulerState {
    double p_succ_local = 0.5;
    double p_succ_global = 0.5;
    std::uint64_t n_succ_local = 0;
    std::uint64_t n_succ_global = 0;
    std::uint64_t n_evals_local = 0;
    std::uint64_t n_evals_global = 0;

    // Branch evaluations since the last (re)start; drives the warmup clause.
    std::uint64_t warmup_evals = 0;
    std::uint64_t warmup_threshold = 0;

    double c_alpha = 0.1;
    double beta_R = 0.05;
    double c_beta = 0.05 * 0.1;
    double L = 0.18;

    static SchedulerState for_dimension(std::size_t n);
};

struct LocalOutcomeFlags {
    bool improved_global_best = false;
    bool boundary_violated = false;
};

struct GlobalOutcomeFlags {
    bool improved_global_best = false;
    bool replaced_unit = false;
};

// Smoothed success estimates P_local and P_global that drive the choice.
double local_success_estimate(const SchedulerState& s);
double global_success_estimate(const SchedulerState& s);

// Probability of choosing the local branch after warmup.
double local_selection_probability(const SchedulerState& s);

Branch choose_component(const SchedulerState& s, std::size_t active_local_units, Rng& rng,
                        SchedulerPolicy policy = SchedulerPolicy::Adaptive);

void record_local_outcome(SchedulerState& s, const LocalOutcomeFlags& outcome);
void record_global_outcome(SchedulerState& s, const GlobalOutcomeFlags& outcome);

// Evaluations spent re-initializing the population: counted for the local
// branch, outside the warmup window.
void record_initialization(SchedulerState& s, std::uint64_t evaluations);

void reset_warmup(SchedulerState& s);

}  // namespace mvie
