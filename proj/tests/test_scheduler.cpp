#include <doctest.h>

#include "mvie/scheduler.hpp"

using namespace mvie;

namespace {

SchedulerState post_warmup(double pl, double pg) {
    SchedulerState s = SchedulerState::for_dimension(10);
    s.warmup_evals = s.warmup_threshold;
    s.p_succ_local = pl;
    s.p_succ_global = pg;
    s.n_succ_local = s.n_evals_local = 10;
    s.n_succ_global = s.n_evals_global = 10;
    return s;
}

}  // namespace

TEST_CASE("defaults") {
    const SchedulerState s = SchedulerState::for_dimension(10);
    CHECK(s.c_alpha == 0.1);
    CHECK(s.beta_R == 0.05);
    CHECK(s.c_beta == s.beta_R * s.c_alpha);
    CHECK(s.L == 0.18);
    CHECK(s.warmup_threshold == 1000);
    CHECK(s.p_succ_local == 0.5);
    CHECK(s.n_evals_local == 0);
}

TEST_CASE("warmup runs both branches") {
    SchedulerState s = SchedulerState::for_dimension(10);
    s.warmup_evals = 50;
    Rng rng(1);
    CHECK(choose_component(s, 40, rng) == Branch::Both);
    CHECK(choose_component(s, 40, rng, SchedulerPolicy::Random) == Branch::Both);
    CHECK(choose_component(s, 40, rng, SchedulerPolicy::LocalOnly) == Branch::Local);
    CHECK(choose_component(s, 40, rng, SchedulerPolicy::GlobalOnly) == Branch::Global);
}

TEST_CASE("selection probability from the success estimates") {
    const SchedulerState s = post_warmup(0.2, 0.1);
    CHECK(local_success_estimate(s) == doctest::Approx(0.2));
    CHECK(global_success_estimate(s) == doctest::Approx(0.1));
    CHECK(local_selection_probability(s) == doctest::Approx(2.0 / 3.0));

    Rng rng(2);
    int local = 0;
    const int draws = 30000;
    for (int i = 0; i < draws; ++i) local += choose_component(s, 40, rng) == Branch::Local;
    CHECK(static_cast<double>(local) / draws == doctest::Approx(2.0 / 3.0).epsilon(0.02));
}

TEST_CASE("no active units forces the global branch") {
    const SchedulerState s = post_warmup(0.9, 0.01);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) CHECK(choose_component(s, 0, rng) == Branch::Global);
}

TEST_CASE("degenerate estimates fall back to a fair coin") {
    SchedulerState s = SchedulerState::for_dimension(2);
    s.warmup_evals = s.warmup_threshold;
    CHECK(local_selection_probability(s) == 0.5);
}

TEST_CASE("local outcome bookkeeping") {
    SchedulerState s = SchedulerState::for_dimension(2);
    s.p_succ_local = 1.0;
    record_local_outcome(s, {true, false});
    CHECK(s.p_succ_local == 1.0);
    CHECK(s.n_succ_local == 1);
    CHECK(s.n_evals_local == 1);

    s.p_succ_local = 0.5;
    record_local_outcome(s, {false, false});
    CHECK(s.p_succ_local == doctest::Approx(0.45));

    s.p_succ_local = 0.5;
    record_local_outcome(s, {false, true});
    CHECK(s.p_succ_local == doctest::Approx(0.4975));
    CHECK(s.n_evals_local == 3);
    CHECK(s.warmup_evals == 3);
}

TEST_CASE("global outcome bookkeeping") {
    SchedulerState s = SchedulerState::for_dimension(2);
    s.p_succ_global = 0.0;
    record_global_outcome(s, {true, true});
    CHECK(s.p_succ_global == doctest::Approx(0.1));
    CHECK(s.n_succ_global == 1);

    s.p_succ_global = 0.0;
    record_global_outcome(s, {false, true});
    CHECK(s.p_succ_global == doctest::Approx(0.005));

    s.p_succ_global = 0.2;
    record_global_outcome(s, {false, false});
    CHECK(s.p_succ_global == doctest::Approx(0.18));
    CHECK(s.n_evals_global == 3);
}

TEST_CASE("initialization counts toward local evaluations only") {
    SchedulerState s = SchedulerState::for_dimension(2);
    record_initialization(s, 40);
    CHECK(s.n_evals_local == 40);
    CHECK(s.warmup_evals == 0);
    s.warmup_evals = 7;
    reset_warmup(s);
    CHECK(s.warmup_evals == 0);
    CHECK(s.n_evals_local == 40);
}

TEST_CASE("selection frequency stays within the clamp") {
    Rng rng(4);
    for (int i = 0; i < 100000; ++i) {
        SchedulerState s = SchedulerState::for_dimension(5);
        s.L = rng.uniform();
        s.p_succ_local = rng.uniform(1e-6, 1.0);
        s.p_succ_global = rng.uniform(1e-6, 1.0);
        s.n_evals_local = 1 + rng.index(10000);
        s.n_evals_global = 1 + rng.index(10000);
        s.n_succ_local = 1 + rng.index(s.n_evals_local);
        s.n_succ_global = 1 + rng.index(s.n_evals_global);
        const double f = local_selection_probability(s);
        CHECK(f >= s.L / (1.0 + s.L) - 1e-15);
        CHECK(f <= 1.0 / (1.0 + s.L) + 1e-15);
    }
}

TEST_CASE("probabilities and counters stay consistent under random outcomes") {
    Rng rng(5);
    SchedulerState s = SchedulerState::for_dimension(3);
    for (int i = 0; i < 20000; ++i) {
        if (rng.uniform() < 0.5)
            record_local_outcome(s, {rng.uniform() < 0.2, rng.uniform() < 0.5});
        else
            record_global_outcome(s, {rng.uniform() < 0.2, rng.uniform() < 0.5});
        CHECK(s.p_succ_local >= 0.0);
        CHECK(s.p_succ_local <= 1.0);
        CHECK(s.p_succ_global >= 0.0);
        CHECK(s.p_succ_global <= 1.0);
        CHECK(s.n_succ_local <= s.n_evals_local);
        CHECK(s.n_succ_global <= s.n_evals_global);
    }
}

TEST_CASE("random policy ignores the estimates") {
    const SchedulerState s = post_warmup(0.99, 0.001);
    Rng rng(6);
    int local = 0;
    for (int i = 0; i < 20000; ++i) local += choose_component(s, 40, rng, SchedulerPolicy::Random) == Branch::Local;
    CHECK(local / 20000.0 == doctest::Approx(0.5).epsilon(0.03));
}
