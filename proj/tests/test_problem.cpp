#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "mvie/problem.hpp"
#include "mvie/rng.hpp"

using namespace mvie;

namespace {

Vector random_point(const ProblemSpec& p, Rng& rng) {
    Vector x(p.n);
    for (std::size_t i = 0; i < p.n; ++i) x[i] = rng.uniform(p.lower[i], p.upper[i]);
    return x;
}

// Second, straight-from-formula implementations used as oracles.
struct Oracle {
    double f;
    std::vector<double> g;
};

Oracle g24_oracle(double x1, double x2) {
    const double x1_2 = x1 * x1, x1_3 = x1_2 * x1, x1_4 = x1_3 * x1;
    return {-x1 - x2,
            {-2.0 * x1_4 + 8.0 * x1_3 - 8.0 * x1_2 + x2 - 2.0,
             -4.0 * x1_4 + 32.0 * x1_3 - 88.0 * x1_2 + 96.0 * x1 + x2 - 36.0}};
}

Oracle g06_oracle(double x1, double x2) {
    const double a = x1 - 10.0, b = x2 - 20.0;
    return {a * a * a + b * b * b,
            {100.0 - (x1 - 5.0) * (x1 - 5.0) - (x2 - 5.0) * (x2 - 5.0),
             (x1 - 6.0) * (x1 - 6.0) + (x2 - 5.0) * (x2 - 5.0) - 82.81}};
}

Oracle welded_beam_oracle(double h, double l, double t, double b) {
    const double P = 6000, L = 14, E = 30e6, G = 12e6;
    const double tau1 = P / (std::numbers::sqrt2 * h * l);
    const double M = P * (L + 0.5 * l);
    const double half = 0.5 * (h + t);
    const double R = std::sqrt(0.25 * l * l + half * half);
    const double J = 2.0 * std::numbers::sqrt2 * h * l * (l * l / 12.0 + half * half);
    const double tau2 = M * R / J;
    const double tau = std::sqrt(tau1 * tau1 + tau1 * tau2 * l / R + tau2 * tau2);
    const double sigma = 6.0 * P * L / (b * t * t);
    const double delta = 4.0 * P * L * L * L / (E * t * t * t * b);
    const double pc = 4.013 * E * t * b * b * b / 6.0 / (L * L) * (1.0 - t / (2.0 * L) * std::sqrt(E / (4.0 * G)));
    return {1.10471 * h * h * l + 0.04811 * t * b * (14.0 + l),
            {tau - 13600, sigma - 30000, h - b, 0.10471 * h * h + 0.04811 * t * b * (14.0 + l) - 5.0, 0.125 - h,
             delta - 0.25, P - pc}};
}

Oracle spring_oracle(double d, double D, double N) {
    return {(N + 2.0) * D * d * d,
            {1.0 - D * D * D * N / (71785.0 * d * d * d * d),
             (4.0 * D * D - d * D) / (12566.0 * (D * d * d * d - d * d * d * d)) + 1.0 / (5108.0 * d * d) - 1.0,
             1.0 - 140.45 * d / (D * D * N), (D + d) / 1.5 - 1.0}};
}

double positive_sum(const std::vector<double>& g) {
    double s = 0;
    for (double v : g) s += std::max(0.0, v);
    return s;
}

void compare_with_oracle(const std::string& name, Oracle (*oracle)(std::span<const double>)) {
    const ProblemSpec& p = lookup(name);
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        const Vector x = random_point(p, rng);
        const Evaluation e = evaluate_uncounted(p, x);
        const Oracle o = oracle(x);
        CAPTURE(name);
        CHECK(e.f == doctest::Approx(o.f).epsilon(1e-12));
        REQUIRE(e.g.size() == o.g.size());
        for (std::size_t j = 0; j < o.g.size(); ++j) CHECK(e.g[j] == doctest::Approx(o.g[j]).epsilon(1e-12).scale(1.0));
        CHECK(e.violation == doctest::Approx(positive_sum(o.g)).epsilon(1e-12));
    }
}

}  // namespace

TEST_CASE("constraint violation sums positive parts") {
    CHECK(constraint_violation(Vector{-1, -2}) == 0.0);
    CHECK(constraint_violation(Vector{1, -2, 3}) == 4.0);
    CHECK(constraint_violation(Vector{}) == 0.0);
}

TEST_CASE("registry holds the seventeen problems") {
    const auto& all = registry();
    REQUIRE(all.size() == 17);
    const std::vector<std::string> names{"g01", "g02", "g04", "g06", "g07", "g08", "g09", "g10", "g12",
                                         "g16", "g18", "g19", "g24", "welded-beam", "pressure-vessel",
                                         "spring", "cantilever"};
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(all[i].name == names[i]);
    CHECK_THROWS_AS(lookup("g99"), ProblemNotFound);
}

TEST_CASE("benchmark metadata: dimensions and constraint counts") {
    // name -> (n, linear + nonlinear, active at optimum)
    const std::map<std::string, std::array<int, 3>> table{
        {"g01", {13, 9, 6}}, {"g02", {20, 2, 1}}, {"g04", {5, 6, 2}},  {"g06", {2, 2, 2}},  {"g07", {10, 8, 6}},
        {"g08", {2, 2, 0}},  {"g09", {7, 4, 2}},  {"g10", {8, 6, 6}},  {"g12", {3, 1, 0}},  {"g16", {5, 38, 4}},
        {"g18", {9, 13, 6}}, {"g19", {15, 5, 0}}, {"g24", {2, 2, 2}},
    };
    for (const auto& [name, row] : table) {
        const ProblemSpec& p = lookup(name);
        CAPTURE(name);
        CHECK(p.n == static_cast<std::size_t>(row[0]));
        CHECK(p.m == static_cast<std::size_t>(row[1]));
        CHECK(p.linear_constraints + p.nonlinear_constraints == row[1]);
        CHECK(p.active_at_optimum == row[2]);
        CHECK(p.family == ProblemFamily::Cec2006);
    }
    CHECK(lookup("g01").linear_constraints == 9);
    CHECK(lookup("g16").linear_constraints == 4);
    CHECK(lookup("g16").nonlinear_constraints == 34);
    CHECK(lookup("g07").linear_constraints == 3);
    CHECK(lookup("g10").linear_constraints == 3);
    for (const char* eng : {"welded-beam", "pressure-vessel", "spring", "cantilever"})
        CHECK(lookup(eng).family == ProblemFamily::Engineering);
}

TEST_CASE("every bundled best-known point reproduces f* and is feasible") {
    for (const ProblemSpec& p : registry()) {
        CAPTURE(p.name);
        for (std::size_t i = 0; i < p.n; ++i) CHECK(p.lower[i] < p.upper[i]);
        const BestKnownCheck c = check_best_known(p);
        if (!p.x_star) {
            CHECK_FALSE(c.has_x_star);
            continue;
        }
        CHECK(c.has_x_star);
        CHECK(c.in_box);
        CHECK(c.objective_error <= kBestKnownTolerance);
        CHECK(c.max_constraint <= kBestKnownTolerance);
        CHECK(c.ok);
    }
}

TEST_CASE("engineering best-known designs") {
    const Evaluation wb = evaluate_uncounted(
        lookup("welded-beam"), Vector{0.205729627974134, 3.470488964774360, 9.036623829898325, 0.205729643534243});
    CHECK(std::abs(wb.f - 1.724852) <= 1e-6);
    CHECK(wb.violation == 0.0);

    const Evaluation pv =
        evaluate_uncounted(lookup("pressure-vessel"), Vector{0.75, 0.375, 38.8601036269430, 221.3654713560083});
    CHECK(std::abs(pv.f - 5850.383060) <= 1e-5);
    CHECK(pv.violation == 0.0);

    const Evaluation sp =
        evaluate_uncounted(lookup("spring"), Vector{0.051699916331388, 0.356978944672547, 11.273668588601133});
    CHECK(sp.f == doctest::Approx(0.012665).epsilon(1e-4));
}

TEST_CASE("pressure vessel thicknesses come in sixteenths") {
    const ProblemSpec& p = lookup("pressure-vessel");
    const Evaluation a = evaluate_uncounted(p, Vector{0.75, 0.375, 40.0, 200.0});
    const Evaluation b = evaluate_uncounted(p, Vector{0.76, 0.37, 40.0, 200.0});
    CHECK(a.f == b.f);
    CHECK(a.g == b.g);
}

TEST_CASE("formulas agree with independent implementations") {
    compare_with_oracle("g24", [](std::span<const double> x) { return g24_oracle(x[0], x[1]); });
    compare_with_oracle("g06", [](std::span<const double> x) { return g06_oracle(x[0], x[1]); });
    compare_with_oracle("welded-beam",
                        [](std::span<const double> x) { return welded_beam_oracle(x[0], x[1], x[2], x[3]); });
    compare_with_oracle("spring", [](std::span<const double> x) { return spring_oracle(x[0], x[1], x[2]); });
}

TEST_CASE("g24 at the box midpoint") {
    const Evaluation e = evaluate_uncounted(lookup("g24"), Vector{1.5, 2.0});
    const Oracle o = g24_oracle(1.5, 2.0);
    CHECK(e.f == o.f);
    CHECK(e.g[0] == doctest::Approx(o.g[0]));
    CHECK(e.g[1] == doctest::Approx(o.g[1]));
}

TEST_CASE("evaluation counter is exact and enforces the budget") {
    const ProblemSpec& p = lookup("g06");
    EvaluationCounter c(3);
    const Vector x{50, 50};
    CHECK(evaluate(p, x, c).nfes_index == 1);
    CHECK(evaluate(p, x, c).nfes_index == 2);
    CHECK(c.remaining() == 1);
    CHECK(evaluate(p, x, c).nfes_index == 3);
    CHECK(c.exhausted());
    CHECK_THROWS_AS(evaluate(p, x, c), BudgetExhausted);
    CHECK(c.count() == 3);
}

TEST_CASE("points outside the box are rejected without consuming budget") {
    const ProblemSpec& p = lookup("g06");
    EvaluationCounter c(10);
    CHECK_THROWS_AS(evaluate(p, Vector{0, 50}, c), std::domain_error);
    CHECK(c.count() == 0);
    CHECK_FALSE(within_box(p, Vector{0, 50}));
    CHECK(within_box(p, Vector{13, 0}));
}

TEST_CASE("evaluation is pure") {
    Rng rng(8);
    for (const ProblemSpec& p : registry()) {
        const Vector x = random_point(p, rng);
        const Evaluation a = evaluate_uncounted(p, x), b = evaluate_uncounted(p, x);
        CHECK(a.f == b.f);
        CHECK(a.g == b.g);
        CHECK(a.violation >= 0.0);
        CHECK((a.violation == 0.0) == a.feasible());
    }
}

TEST_CASE("singular objective values are reported as +inf") {
    // g08 divides by x1^3 (x1 + x2).
    const Evaluation e = evaluate_uncounted(lookup("g08"), Vector{0.0, 0.0});
    CHECK(std::isinf(e.f));
    CHECK(e.f > 0);
}
