#include "mvie/global_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvie {

Vector de_rand1_exponential(std::span<const double> x1, std::span<const double> x2, std::span<const double> x3,
                            const DEParams& params, const ProblemSpec& problem, Rng& rng) {
    const std::size_t n = x1.size();
    Vector trial(x1.begin(), x1.end());
    std::size_t k = rng.index(n);
    std::size_t copied = 0;
    do {
        trial[k] = x1[k] + params.F * (x2[k] - x3[k]);
        k = (k + 1) % n;
        ++copied;
    } while (copied < n && rng.uniform() < params.CR);
    for (std::size_t i = 0; i < n; ++i) trial[i] = std::clamp(trial[i], problem.lower[i], problem.upper[i]);
    return trial;
}

std::size_t select_replacement_target(std::span<const VieUnit> population, Rng& rng) {
    if (population.size() < 2) throw std::invalid_argument("replacement needs at least two units");
    const std::size_t a = rng.index(population.size());
    std::size_t b = rng.index(population.size() - 1);
    if (b >= a) ++b;
    return deb_better(population[b].ranked(), population[a].ranked()) ? a : b;
}

std::size_t nearest_donor(std::span<const double> x, const std::array<const VieUnit*, 3>& donors) {
    std::size_t best = 0;
    double best_d = squared_distance(x, donors[0]->x);
    for (std::size_t i = 1; i < donors.size(); ++i) {
        const double d = squared_distance(x, donors[i]->x);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

VieUnit inherit_parameters(const Evaluation& trial, const std::array<const VieUnit*, 3>& donors,
                           const ProblemSpec& problem) {
    const VieUnit& donor = *donors[nearest_donor(trial.x, donors)];
    if (!donor.active) return make_unit(problem, trial);

    VieUnit u = donor;
    u.x = trial.x;
    u.f_x = trial.f;
    u.g_x = trial.g;
    u.violation_x = trial.violation;
    for (std::size_t j = 0; j < problem.m; ++j) u.b[j] = std::max(u.b[j], std::max(0.0, trial.g[j]));
    u.b_f.reset();
    if (trial.feasible()) u.b_f = trial.f;
    u.ancestors.push_back(u.ranked());
    while (u.ancestors.size() > VieUnit::kAncestorDepth) u.ancestors.pop_front();
    u.active = true;
    u.iterations = 0;
    u.diagnostics = {};
    return u;
}

GlobalOutcome global_step(std::vector<VieUnit>& population, const ProblemSpec& problem, Rng& rng,
                          EvaluationCounter& counter, const RankedSolution& global_best, const DEParams& params) {
    const std::size_t size = population.size();
    if (size < 4) throw std::invalid_argument("global step needs at least four units");
    if (counter.exhausted()) throw BudgetExhausted();

    GlobalOutcome out;
    out.victim = select_replacement_target(population, rng);
    std::array<std::size_t, 3> idx{};
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t r;
        do {
            r = rng.index(size);
        } while (r == out.victim || std::find(idx.begin(), idx.begin() + i, r) != idx.begin() + i);
        idx[i] = r;
    }
    const std::array<const VieUnit*, 3> donors{&population[idx[0]], &population[idx[1]], &population[idx[2]]};

    const Vector x = de_rand1_exponential(donors[0]->x, donors[1]->x, donors[2]->x, params, problem, rng);
    out.evaluation = evaluate(problem, x, counter);
    const RankedSolution trial{out.evaluation.f, out.evaluation.violation};
    out.improved_best = deb_better(trial, global_best);
    if (deb_better(trial, population[out.victim].ranked())) {
        population[out.victim] = inherit_parameters(out.evaluation, donors, problem);
        out.replaced_unit = true;
    }
    return out;
}

}  // namespace mvie
