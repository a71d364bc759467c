#include "mvie/scheduler.hpp"

#include <algorithm>

namespace mvie {

SchedulerState SchedulerState::for_dimension(std::size_t n) {
    SchedulerState s;
    s.c_beta = s.beta_R * s.c_alpha;
    s.warmup_threshold = 100 * static_cast<std::uint64_t>(n);
    return s;
}

double local_success_estimate(const SchedulerState& s) {
    if (s.n_evals_local == 0) return 0.0;
    return s.p_succ_local * static_cast<double>(s.n_succ_local) / static_cast<double>(s.n_evals_local);
}

double global_success_estimate(const SchedulerState& s) {
    if (s.n_evals_global == 0) return 0.0;
    return s.p_succ_global * static_cast<double>(s.n_succ_global) / static_cast<double>(s.n_evals_global);
}

double local_selection_probability(const SchedulerState& s) {
    const double pl = local_success_estimate(s);
    const double pg = global_success_estimate(s);
    const double p1 = std::max(pl, s.L * pg);
    const double p2 = std::max(pg, s.L * pl);
    if (p1 + p2 == 0.0) return 0.5;
    return p1 / (p1 + p2);
}

Branch choose_component(const SchedulerState& s, std::size_t active_local_units, Rng& rng, SchedulerPolicy policy) {
    switch (policy) {
        case SchedulerPolicy::LocalOnly:
            return Branch::Local;
        case SchedulerPolicy::GlobalOnly:
            return Branch::Global;
        case SchedulerPolicy::Random:
        case SchedulerPolicy::Adaptive:
            break;
    }
    if (s.warmup_evals < s.warmup_threshold) return Branch::Both;
    const double p = policy == SchedulerPolicy::Random ? 0.5 : local_selection_probability(s);
    return rng.uniform() < p && active_local_units > 0 ? Branch::Local : Branch::Global;
}

void record_local_outcome(SchedulerState& s, const LocalOutcomeFlags& outcome) {
    ++s.n_evals_local;
    ++s.warmup_evals;
    if (outcome.improved_global_best) {
        s.p_succ_local = (1.0 - s.c_alpha) * s.p_succ_local + s.c_alpha;
        ++s.n_succ_local;
    } else if (outcome.boundary_violated) {
        s.p_succ_local = (1.0 - s.c_beta) * s.p_succ_local;
    } else {
        s.p_succ_local = (1.0 - s.c_alpha) * s.p_succ_local;
    }
}

void record_global_outcome(SchedulerState& s, const GlobalOutcomeFlags& outcome) {
    ++s.n_evals_global;
    ++s.warmup_evals;
    if (outcome.improved_global_best) {
        s.p_succ_global = (1.0 - s.c_alpha) * s.p_succ_global + s.c_alpha;
        ++s.n_succ_global;
    } else if (outcome.replaced_unit) {
        s.p_succ_global = (1.0 - s.c_beta) * s.p_succ_global + s.c_beta;
    } else {
        s.p_succ_global = (1.0 - s.c_alpha) * s.p_succ_global;
    }
}

void record_initialization(SchedulerState& s, std::uint64_t evaluations) { s.n_evals_local += evaluations; }

void reset_warmup(SchedulerState& s) { s.warmup_evals = 0; }

}  // namespace mvie
