#pragma once

// (1+1)-ViE local search unit: a (1+1)-CMA-ES with active covariance updates
// whose constraints are handled through per-constraint viability boundaries
// that start relaxed around the initial point and tighten monotonically.

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "mvie/matrix.hpp"
#include "mvie/problem.hpp"
#include "mvie/ranking.hpp"
#include "mvie/rng.hpp"

namespace mvie {

struct VieConstants {
    double c = 0;            // evolution-path learning rate
    double c_c = 0;          // constraint-direction learning rate
    double c_p = 0;          // success-probability learning rate
    double d = 0;            // step-size damping
    double B = 0;            // constraint-direction update strength
    double c_cov_plus = 0;   // rank-one update
    double c_cov_minus = 0;  // active (negative) update
    double p_thresh = 0;
    double p_target = 0;

    static VieConstants for_dimension(std::size_t n);
};

struct UnitDiagnostics {
    std::uint64_t skipped_downdates = 0;
    std::uint64_t skipped_direction_terms = 0;
    std::uint64_t inverse_refreshes = 0;
};

struct VieUnit {
    Vector x;  // parent
    double f_x = 0;
    Vector g_x;
    double violation_x = 0;  // raw violation of the parent

    double sigma = 1;
    Matrix A;      // covariance factor, C = A A^T
    Matrix A_inv;  // kept in step with A
    Vector s;      // evolution path
    std::vector<Vector> v;  // per-constraint violation directions

    double p_succ = 0;   // drives the step size
    Vector p_succ_j;     // per-constraint success probabilities
    Vector b;            // viability boundaries, b_j >= 0
    std::optional<double> b_f;  // objective boundary, set once feasible

    std::deque<RankedSolution> ancestors;  // oldest first, at most kAncestorDepth
    bool active = true;
    VieConstants constants;

    std::uint64_t iterations = 0;
    std::uint64_t accepted_steps = 0;
    int updates_since_refresh = 0;
    UnitDiagnostics diagnostics;

    static constexpr std::size_t kAncestorDepth = 5;
    static constexpr int kInverseRefreshPeriod = 50;

    std::size_t dim() const { return x.size(); }
    RankedSolution ranked() const { return {f_x, violation_x}; }
};

enum class OutcomeKind { ViableAccepted, ViableRejected, BoundaryViolated };

struct StepOutcome {
    Evaluation evaluation;
    bool accepted = false;
    bool boundary_violated = false;
    bool improved_global_best = false;  // filled in by the engine
    bool converged_now = false;
};

// Default parameters around an already evaluated point: sigma from the mean
// box width, diagonal A, boundaries relaxed to encompass the point.
VieUnit make_unit(const ProblemSpec& problem, const Evaluation& parent);

// Uniform point in the box, one evaluation.
VieUnit init_unit(const ProblemSpec& problem, Rng& rng, EvaluationCounter& counter);

struct Offspring {
    Vector y;
    Vector z;  // the raw normal draw behind y
};

// y = x + sigma * A z, without box handling.
Vector offspring_point(const VieUnit& unit, std::span<const double> z);

// Resamples z up to 10 times while y leaves the box, then clamps.
Offspring sample_offspring(const VieUnit& unit, const ProblemSpec& problem, Rng& rng);

void update_step_size(VieUnit& unit);

// A' = sqrt(alpha) A + sqrt(alpha)/|w|^2 (sqrt(1 + beta/alpha |w|^2) - 1) d w^T,
// w = A^{-1} d, so that A' A'^T = alpha A A^T + beta d d^T.
// nullopt when a downdate's square-root argument is <= 1e-12.
std::optional<Matrix> cholesky_rank_one_update(const Matrix& A, double alpha, double beta,
                                               std::span<const double> direction);

// The same update applied to a unit, keeping A_inv in step.
// Returns false (and counts a skipped downdate) when the update is infeasible.
bool apply_rank_one_update(VieUnit& unit, double alpha, double beta, std::span<const double> direction);

void on_success_covariance_update(VieUnit& unit, std::span<const double> z);

// Active downdate along A z when the offspring is worse than the oldest of
// kAncestorDepth queued ancestors. `offspring` is compared with deb rules.
// Returns true when an update was applied.
bool fifth_ancestor_active_update(VieUnit& unit, std::span<const double> z, const RankedSolution& offspring);

void constraint_direction_update(VieUnit& unit, std::span<const double> z, const std::vector<bool>& exceeded);

void update_boundaries(VieUnit& unit, const Evaluation& eval);

void viability_probability_update(VieUnit& unit, OutcomeKind kind, const std::vector<bool>& exceeded);

// Disables the unit when one of the stopping criteria holds. Until the first
// accepted step the evolution path carries no information, so sigma times the
// largest axis of C stands in for |s| sigma.
bool check_convergence(VieUnit& unit);

// Σ_j max(0, g_j - b_j)
double boundary_shifted_violation(const VieUnit& unit, std::span<const double> g);

// One sample, one evaluation, and all adaptation that follows from it.
StepOutcome local_step(VieUnit& unit, const ProblemSpec& problem, Rng& rng, EvaluationCounter& counter);

// Same pipeline for an offspring that has already been drawn (used by tests
// that force z).
StepOutcome local_step_with(VieUnit& unit, const ProblemSpec& problem, const Offspring& offspring,
                            EvaluationCounter& counter);

// Recomputes A_inv from A.
void refresh_inverse(VieUnit& unit);

double condition_number(const Matrix& A);

}  // namespace mvie
