#include "mvie/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "problem_sets.hpp"

namespace mvie {

std::uint64_t EvaluationCounter::next() {
    if (count_ >= budget_) throw BudgetExhausted();
    return ++count_;
}

double constraint_violation(std::span<const double> g) {
    double v = 0.0;
    for (double gj : g) v += std::max(0.0, gj);
    return v;
}

bool within_box(const ProblemSpec& problem, std::span<const double> x) {
    if (x.size() != problem.n) return false;
    for (std::size_t i = 0; i < problem.n; ++i)
        if (!(x[i] >= problem.lower[i] && x[i] <= problem.upper[i])) return false;
    return true;
}

Evaluation evaluate_uncounted(const ProblemSpec& problem, std::span<const double> x) {
    Evaluation e;
    e.x.assign(x.begin(), x.end());
    e.g.assign(problem.m, 0.0);
    e.f = problem.objective(x);
    if (problem.m > 0) problem.constraints(x, e.g);
    // Singular points (g08 at x1 = 0, for one) rank below every regular point.
    if (std::isnan(e.f)) e.f = std::numeric_limits<double>::infinity();
    for (double& gj : e.g)
        if (std::isnan(gj)) gj = std::numeric_limits<double>::infinity();
    e.violation = constraint_violation(e.g);
    return e;
}

Evaluation evaluate(const ProblemSpec& problem, std::span<const double> x, EvaluationCounter& counter) {
    if (counter.exhausted()) throw BudgetExhausted();
    if (!within_box(problem, x)) throw std::domain_error("point outside the box of " + problem.name);
    Evaluation e = evaluate_uncounted(problem, x);
    e.nfes_index = counter.next();
    return e;
}

BestKnownCheck check_best_known(const ProblemSpec& problem) {
    BestKnownCheck check;
    if (!problem.x_star) {
        check.ok = true;
        return check;
    }
    check.has_x_star = true;
    check.in_box = within_box(problem, *problem.x_star);
    const Evaluation e = evaluate_uncounted(problem, *problem.x_star);
    check.objective_error = std::abs(e.f - problem.f_star);
    check.max_constraint = e.g.empty() ? 0.0 : *std::max_element(e.g.begin(), e.g.end());
    check.ok = check.in_box && check.objective_error <= kBestKnownTolerance &&
               check.max_constraint <= kBestKnownTolerance;
    return check;
}

namespace {

std::vector<ProblemSpec> build_registry() {
    std::vector<ProblemSpec> all = detail::cec2006_problems();
    for (auto& p : detail::engineering_problems()) all.push_back(std::move(p));
    for (const auto& p : all) {
        if (p.lower.size() != p.n || p.upper.size() != p.n)
            throw std::logic_error(p.name + ": bounds do not match dimension");
        for (std::size_t i = 0; i < p.n; ++i)
            if (!(p.lower[i] < p.upper[i])) throw std::logic_error(p.name + ": empty box");
        if (!check_best_known(p).ok) throw std::logic_error(p.name + ": bundled x* fails self-check");
    }
    return all;
}

}  // namespace

const std::vector<ProblemSpec>& registry() {
    static const std::vector<ProblemSpec> problems = build_registry();
    return problems;
}

const ProblemSpec& lookup(const std::string& name) {
    const auto& all = registry();
    auto it = std::find_if(all.begin(), all.end(), [&](const ProblemSpec& p) { return p.name == name; });
    if (it == all.end()) throw ProblemNotFound(name);
    return *it;
}

}  // namespace mvie
