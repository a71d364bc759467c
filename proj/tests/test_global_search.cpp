#include <doctest.h>

#include <cmath>

#include "mvie/global_search.hpp"

using namespace mvie;

namespace {

ProblemSpec box_problem(std::size_t n, double lo, double hi) {
    ProblemSpec p;
    p.name = "box";
    p.n = n;
    p.m = 1;
    p.lower.assign(n, lo);
    p.upper.assign(n, hi);
    p.objective = [](std::span<const double> x) {
        double s = 0;
        for (double v : x) s += v * v;
        return s;
    };
    p.constraints = [](std::span<const double> x, std::span<double> g) { g[0] = 1.0 - x[0]; };
    return p;
}

VieUnit unit_at(const ProblemSpec& p, Vector x) { return make_unit(p, evaluate_uncounted(p, x)); }

VieUnit ranked_unit(double f, double violation) {
    VieUnit u;
    u.f_x = f;
    u.violation_x = violation;
    return u;
}

std::size_t genes_changed(const Vector& trial, const Vector& base) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < trial.size(); ++i) k += trial[i] != base[i];
    return k;
}

}  // namespace

TEST_CASE("rand/1 with exponential crossover") {
    const ProblemSpec p = box_problem(2, -10, 10);
    Rng rng(1);

    SUBCASE("equal difference vectors leave the base") {
        const Vector x1{1, 2}, x2{3, 3};
        CHECK(de_rand1_exponential(x1, x2, x2, {}, p, rng) == x1);
    }
    SUBCASE("full crossover copies the mutant") {
        const Vector t = de_rand1_exponential(Vector{0, 0}, Vector{2, 2}, Vector{0, 0}, {0.5, 1.0}, p, rng);
        CHECK(t == Vector{1, 1});
    }
    SUBCASE("trial is clamped to the box") {
        const Vector t = de_rand1_exponential(Vector{9, 9}, Vector{10, 10}, Vector{-10, -10}, {0.5, 1.0}, p, rng);
        CHECK(t == Vector{10, 10});
    }
}

TEST_CASE("zero crossover rate copies exactly one gene") {
    const ProblemSpec p = box_problem(10, -100, 100);
    Vector base(10, 0.0), x2(10), x3(10, 0.0);
    for (std::size_t i = 0; i < 10; ++i) x2[i] = 1.0 + i;
    Rng rng(2);
    for (int i = 0; i < 1000; ++i) CHECK(genes_changed(de_rand1_exponential(base, x2, x3, {0.5, 0.0}, p, rng), base) == 1);
}

TEST_CASE("copied gene count follows the truncated geometric law") {
    const std::size_t n = 10;
    const double cr = 0.9;
    const ProblemSpec p = box_problem(n, -100, 100);
    Vector base(n, 0.0), x2(n, 4.0), x3(n, 0.0);
    Rng rng(3);
    const int draws = 10000;
    double s1 = 0, s2 = 0;
    for (int i = 0; i < draws; ++i) {
        const double k = static_cast<double>(genes_changed(de_rand1_exponential(base, x2, x3, {0.5, cr}, p, rng), base));
        s1 += k;
        s2 += k * k;
    }
    const double mean = s1 / draws;
    const double se = std::sqrt((s2 / draws - mean * mean) / draws);
    double expected = 0;
    for (std::size_t k = 0; k < n; ++k) expected += std::pow(cr, static_cast<double>(k));
    CHECK(std::abs(mean - expected) <= 3.0 * se);
}

TEST_CASE("replacement target is the worse of two") {
    Rng rng(4);
    const std::vector<VieUnit> better_first{ranked_unit(1, 0), ranked_unit(5, 0)};
    const std::vector<VieUnit> feasible_second{ranked_unit(1, 3), ranked_unit(9, 0)};
    for (int i = 0; i < 20; ++i) {
        CHECK(select_replacement_target(better_first, rng) == 1);
        CHECK(select_replacement_target(feasible_second, rng) == 0);
    }

    // On a tie the second draw is returned.
    const std::vector<VieUnit> clones(5, ranked_unit(2, 0));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng a(seed), replay(seed);
        const std::size_t first = replay.index(5);
        std::size_t second = replay.index(4);
        if (second >= first) ++second;
        CHECK(select_replacement_target(clones, a) == second);
    }
    CHECK_THROWS(select_replacement_target(std::vector<VieUnit>(1), rng));
}

TEST_CASE("parameter inheritance") {
    const ProblemSpec p = box_problem(2, -10, 10);
    VieUnit u0 = unit_at(p, {0, 0}), u1 = unit_at(p, {4, 4}), u2 = unit_at(p, {-4, 4});
    u1.sigma = 0.123;
    u1.p_succ = 0.77;
    u1.A = Matrix::diagonal(Vector{2, 3});
    u1.A_inv = Matrix::diagonal(Vector{0.5, 1.0 / 3.0});

    SUBCASE("closest active donor") {
        const std::array<const VieUnit*, 3> donors{&u0, &u1, &u2};
        CHECK(nearest_donor(Vector{4, 4}, donors) == 1);
        const VieUnit child = inherit_parameters(evaluate_uncounted(p, Vector{4, 4}), donors, p);
        CHECK(child.sigma == 0.123);
        CHECK(child.p_succ == 0.77);
        CHECK(child.A == u1.A);
        CHECK(child.x == Vector{4, 4});
        CHECK(child.active);
    }
    SUBCASE("closest donor converged") {
        u1.active = false;
        const std::array<const VieUnit*, 3> donors{&u0, &u1, &u2};
        const VieUnit child = inherit_parameters(evaluate_uncounted(p, Vector{3, 3}), donors, p);
        CHECK(child.sigma == doctest::Approx(0.3 * 20.0));
        CHECK(child.A == Matrix::identity(2));
        CHECK(child.x == Vector{3, 3});
    }
    SUBCASE("ties go to the lowest index") {
        const std::array<const VieUnit*, 3> donors{&u1, &u2, &u0};
        CHECK(nearest_donor(Vector{0, 4}, donors) == 0);
    }
    SUBCASE("inherited boundaries admit the trial point") {
        u0.b = {0.0};
        const std::array<const VieUnit*, 3> donors{&u0, &u1, &u2};
        const Evaluation trial = evaluate_uncounted(p, Vector{0.5, 0});  // g = 0.5
        const VieUnit child = inherit_parameters(trial, donors, p);
        CHECK(child.b[0] == 0.5);
        CHECK_FALSE(child.b_f.has_value());
    }
}

TEST_CASE("global steps") {
    const ProblemSpec p = box_problem(3, -10, 10);
    Rng rng(5);

    SUBCASE("clones never replace each other") {
        std::vector<VieUnit> pop(4, unit_at(p, {2, 2, 2}));
        EvaluationCounter c(10);
        const GlobalOutcome o = global_step(pop, p, rng, c, {0.0, 0.0}, {});
        CHECK(c.count() == 1);
        CHECK(o.evaluation.x == Vector{2, 2, 2});
        CHECK_FALSE(o.replaced_unit);
        CHECK_FALSE(o.improved_best);
    }
    SUBCASE("random populations") {
        std::vector<VieUnit> pop;
        for (int i = 0; i < 8; ++i) pop.push_back(unit_at(p, {rng.uniform(-10, 10), rng.uniform(-10, 10), 0.0}));
        EvaluationCounter c(1000);
        RankedSolution best{1e300, 1e300};
        for (int i = 0; i < 500; ++i) {
            const auto before = pop;
            const GlobalOutcome o = global_step(pop, p, rng, c, best, {});
            CHECK(c.count() == static_cast<std::uint64_t>(i + 1));
            REQUIRE(pop.size() == 8);
            CHECK_FALSE(deb_better(before[o.victim].ranked(), pop[o.victim].ranked()));
            for (std::size_t k = 0; k < pop.size(); ++k)
                if (k != o.victim || !o.replaced_unit) CHECK(pop[k].x == before[k].x);
            const RankedSolution trial{o.evaluation.f, o.evaluation.violation};
            CHECK(o.improved_best == deb_better(trial, best));
            if (o.improved_best) best = trial;
        }
    }
    SUBCASE("small populations are rejected") {
        std::vector<VieUnit> pop(3, unit_at(p, {0, 0, 0}));
        EvaluationCounter c(10);
        CHECK_THROWS(global_step(pop, p, rng, c, {0, 0}, {}));
        CHECK(c.count() == 0);
    }
}
