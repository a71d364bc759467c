#pragma once

// Differential Evolution over the means of the local search units.

#include <array>
#include <span>
#include <vector>

#include "mvie/problem.hpp"
#include "mvie/ranking.hpp"
#include "mvie/rng.hpp"
#include "mvie/vie_unit.hpp"

namespace mvie {

struct DEParams {
    double F = 0.5;
    double CR = 0.9;
};

// rand/1 mutant x1 + F (x2 - x3), exponential crossover against x1, clamped
// to the box.
Vector de_rand1_exponential(std::span<const double> x1, std::span<const double> x2, std::span<const double> x3,
                            const DEParams& params, const ProblemSpec& problem, Rng& rng);

// Two distinct random indices; the deb-worse one (the second on a tie).
std::size_t select_replacement_target(std::span<const VieUnit> population, Rng& rng);

// Index into `donors` of the mean closest to x (lowest index on ties).
std::size_t nearest_donor(std::span<const double> x, const std::array<const VieUnit*, 3>& donors);

// Wraps an evaluated trial point into a unit. Parameters come from the
// nearest donor when it is still active, defaults otherwise. Inherited
// boundaries are relaxed just enough to keep the trial point viable.
VieUnit inherit_parameters(const Evaluation& trial, const std::array<const VieUnit*, 3>& donors,
                           const ProblemSpec& problem);

struct GlobalOutcome {
    Evaluation evaluation;
    bool improved_best = false;
    bool replaced_unit = false;
    std::size_t victim = 0;
};

// One recombination: victim by binary tournament, three distinct donors,
// one evaluation. `global_best` is compared with raw violations only; it is
// not modified here.
GlobalOutcome global_step(std::vector<VieUnit>& population, const ProblemSpec& problem, Rng& rng,
                          EvaluationCounter& counter, const RankedSolution& global_best,
                          const DEParams& params = {});

}  // namespace mvie
