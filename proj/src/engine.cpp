#include "mvie/engine.hpp"

#include <algorithm>
#include <cmath>

namespace mvie {

namespace {

constexpr double kRestartTolerance = 1e-10;

}  // namespace

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Full: return "full";
        case Mode::LocalOnly: return "local-only";
        case Mode::GlobalOnly: return "global-only";
        case Mode::RandomScheduler: return "random-scheduler";
    }
    return "full";
}

Mode parse_mode(const std::string& text) {
    for (Mode m : {Mode::Full, Mode::LocalOnly, Mode::GlobalOnly, Mode::RandomScheduler}) {
        if (to_string(m) == text) return m;
    }
    throw InvalidConfig("unknown mode: " + text);
}

std::uint64_t default_budget(const ProblemSpec& problem) {
    return problem.family == ProblemFamily::Engineering ? 200000 : 500000;
}

bool RunResult::operator==(const RunResult& o) const {
    return problem == o.problem && seed == o.seed && mode == o.mode && best_x == o.best_x &&
           best.f == o.best.f && best.violation == o.best.violation && nfes_used == o.nfes_used &&
           max_nfes == o.max_nfes && nfes_to_success == o.nfes_to_success && success == o.success &&
           checkpoints == o.checkpoints && restarts == o.restarts && local_steps == o.local_steps &&
           global_steps == o.global_steps && skipped_downdates == o.skipped_downdates && trace == o.trace;
}

void validate(const RunConfig& config) {
    if (config.pop_size < 4) throw InvalidConfig("pop_size must be at least 4");
    if (config.max_nfes && *config.max_nfes == 0) throw InvalidConfig("max_nfes must be positive");
    if (!(config.target_accuracy > 0)) throw InvalidConfig("target_accuracy must be positive");
    if (!(config.de_params.F > 0)) throw InvalidConfig("F must be positive");
    if (!(config.de_params.CR >= 0 && config.de_params.CR <= 1)) throw InvalidConfig("CR must lie in [0, 1]");
    const auto& s = config.scheduler;
    if (!(s.c_alpha > 0 && s.c_alpha <= 1)) throw InvalidConfig("c_alpha must lie in (0, 1]");
    if (!(s.beta_R >= 0 && s.beta_R <= 1)) throw InvalidConfig("beta_R must lie in [0, 1]");
    if (!(s.L >= 0 && s.L <= 1)) throw InvalidConfig("L must lie in [0, 1]");
    lookup(config.problem);
}

SchedulerPolicy apply_mode(Mode mode) {
    switch (mode) {
        case Mode::Full: return SchedulerPolicy::Adaptive;
        case Mode::LocalOnly: return SchedulerPolicy::LocalOnly;
        case Mode::GlobalOnly: return SchedulerPolicy::GlobalOnly;
        case Mode::RandomScheduler: return SchedulerPolicy::Random;
    }
    return SchedulerPolicy::Adaptive;
}

std::size_t select_local_unit(std::span<const VieUnit> population) {
    std::vector<RankedSolution> ranked;
    ranked.reserve(population.size());
    for (const auto& u : population) ranked.push_back(u.ranked());
    for (std::size_t i : rank_population(ranked)) {
        if (population[i].active) return i;
    }
    throw std::logic_error("no active local search unit");
}

bool check_restart(std::span<const VieUnit> population, const RankedSolution& best) {
    if (population.empty()) return true;
    if (std::none_of(population.begin(), population.end(), [](const VieUnit& u) { return u.active; })) return true;
    double mean_f = 0.0, mean_v = 0.0;
    for (const auto& u : population) {
        mean_f += u.f_x;
        mean_v += u.violation_x;
    }
    mean_f /= static_cast<double>(population.size());
    mean_v /= static_cast<double>(population.size());
    return std::abs(mean_f - best.f) <= kRestartTolerance * std::max(1.0, std::abs(best.f)) &&
           std::abs(mean_v - best.violation) <= kRestartTolerance;
}

CheckpointRecord make_checkpoint(const ProblemSpec& problem, std::uint64_t nfes, const Evaluation& best) {
    CheckpointRecord c;
    c.nfes = nfes;
    c.error = best.f - problem.f_star;
    for (double g : best.g) {
        if (g > 1.0) ++c.violated_counts[0];
        if (g > 0.01) ++c.violated_counts[1];
        if (g > 1e-4) ++c.violated_counts[2];
    }
    c.mean_violation = problem.m == 0 ? 0.0 : best.violation / static_cast<double>(problem.m);
    return c;
}

namespace {

class Run {
public:
    Run(const RunConfig& config, const RunHooks& hooks)
        : config_(config),
          hooks_(hooks),
          problem_(lookup(config.problem)),
          rng_(config.seed),
          counter_(config.max_nfes.value_or(default_budget(problem_))),
          policy_(apply_mode(config.mode)),
          state_(SchedulerState::for_dimension(problem_.n)) {
        state_.c_alpha = config.scheduler.c_alpha;
        state_.beta_R = config.scheduler.beta_R;
        state_.c_beta = state_.beta_R * state_.c_alpha;
        state_.L = config.scheduler.L;
        if (policy_ == SchedulerPolicy::LocalOnly || policy_ == SchedulerPolicy::GlobalOnly)
            state_.warmup_threshold = 0;
        checkpoints_ = config.checkpoints;
        std::sort(checkpoints_.begin(), checkpoints_.end());
        result_.problem = problem_.name;
        result_.seed = config.seed;
        result_.mode = config.mode;
        result_.max_nfes = counter_.budget();
        if (config.trace_enabled) result_.trace.emplace();
    }

    RunResult execute() {
        try {
            initialize_population();
            while (!done()) cycle();
        } catch (const BudgetExhausted&) {
        }
        result_.best_x = best_.x;
        result_.best = {best_.f, best_.violation};
        result_.nfes_used = counter_.count();
        result_.success = result_.nfes_to_success.has_value();
        return std::move(result_);
    }

private:
    bool done() const {
        if (counter_.exhausted()) return true;
        return result_.nfes_to_success && !config_.capture_checkpoints;
    }

    // Every evaluation of the run passes through here, in order.
    bool observe(const Evaluation& e) {
        bool improved = false;
        if (!have_best_ || deb_better({e.f, e.violation}, {best_.f, best_.violation})) {
            best_ = e;
            have_best_ = true;
            improved = true;
        }
        if (!result_.nfes_to_success && best_.feasible() && best_.f - problem_.f_star <= config_.target_accuracy)
            result_.nfes_to_success = e.nfes_index;
        while (next_checkpoint_ < checkpoints_.size() && checkpoints_[next_checkpoint_] <= e.nfes_index) {
            if (checkpoints_[next_checkpoint_] == e.nfes_index && config_.capture_checkpoints)
                result_.checkpoints.push_back(make_checkpoint(problem_, e.nfes_index, best_));
            ++next_checkpoint_;
        }
        return improved;
    }

    void initialize_population() {
        population_.clear();
        population_.reserve(config_.pop_size);
        for (std::size_t i = 0; i < config_.pop_size; ++i) {
            population_.push_back(init_unit(problem_, rng_, counter_));
            const VieUnit& u = population_.back();
            observe(Evaluation{u.x, u.f_x, u.g_x, u.violation_x, counter_.count()});
            record_initialization(state_, 1);
            if (done()) return;
        }
        reset_warmup(state_);
    }

    std::size_t active_units() const {
        return static_cast<std::size_t>(
            std::count_if(population_.begin(), population_.end(), [](const VieUnit& u) { return u.active; }));
    }

    void cycle() {
        const std::size_t active = active_units();
        const Branch branch = choose_component(state_, active, rng_, policy_);
        const bool local = (branch == Branch::Local || branch == Branch::Both) && active > 0;
        const bool global = branch == Branch::Global || branch == Branch::Both ||
                            (!local && policy_ != SchedulerPolicy::LocalOnly);
        if (local) local_branch();
        if (done()) return;
        if (global) global_branch();
        if (done()) return;
        if (check_restart(population_, {best_.f, best_.violation})) {
            ++result_.restarts;
            initialize_population();
        }
    }

    void local_branch() {
        const std::size_t idx = select_local_unit(population_);
        VieUnit& unit = population_[idx];
        std::optional<VieUnit> before;
        if (hooks_.on_local_step) before = unit;
        const std::uint64_t skipped = unit.diagnostics.skipped_downdates;
        StepOutcome out = local_step(unit, problem_, rng_, counter_);
        result_.skipped_downdates += unit.diagnostics.skipped_downdates - skipped;
        out.improved_global_best = observe(out.evaluation);
        record_local_outcome(state_, {out.improved_global_best, out.boundary_violated});
        ++result_.local_steps;
        if (hooks_.on_local_step) hooks_.on_local_step(*before, unit, out);
        trace(Branch::Local);
    }

    void global_branch() {
        const GlobalOutcome out = global_step(population_, problem_, rng_, counter_, {best_.f, best_.violation},
                                              config_.de_params);
        const bool improved = observe(out.evaluation);
        record_global_outcome(state_, {improved, out.replaced_unit});
        ++result_.global_steps;
        trace(Branch::Global);
    }

    double freq_local() const {
        switch (policy_) {
            case SchedulerPolicy::LocalOnly: return 1.0;
            case SchedulerPolicy::GlobalOnly: return 0.0;
            case SchedulerPolicy::Random: return 0.5;
            case SchedulerPolicy::Adaptive: break;
        }
        if (state_.warmup_evals < state_.warmup_threshold) return 0.5;
        return local_selection_probability(state_);
    }

    void trace(Branch branch) {
        if (!result_.trace) return;
        result_.trace->push_back(TraceRecord{counter_.count(), branch, best_.f, best_.violation, state_.p_succ_local,
                                             state_.p_succ_global, freq_local()});
    }

    const RunConfig& config_;
    const RunHooks& hooks_;
    const ProblemSpec& problem_;
    Rng rng_;
    EvaluationCounter counter_;
    SchedulerPolicy policy_;
    SchedulerState state_;
    std::vector<std::uint64_t> checkpoints_;
    std::size_t next_checkpoint_ = 0;
    std::vector<VieUnit> population_;
    Evaluation best_;
    bool have_best_ = false;
    RunResult result_;
};

}  // namespace

RunResult run(const RunConfig& config, const RunHooks& hooks) {
    validate(config);
    return Run(config, hooks).execute();
}

}  // namespace mvie
