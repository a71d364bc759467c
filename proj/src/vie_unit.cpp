#include "mvie/vie_unit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mvie/kernels.hpp"

namespace mvie {

namespace {

constexpr double kSigmaMin = 1e-20;
constexpr double kSigmaMax = 1e20;
constexpr double kDowndateFloor = 1e-12;
constexpr double kDirectionFloor = 1e-20;
constexpr double kPathTolerance = 1e-12;
constexpr double kMaxScaledVariance = 1e8;
constexpr double kMaxCondition = 1e14;
constexpr int kMaxResamples = 10;

double mean_width(const ProblemSpec& problem) {
    double sum = 0.0;
    for (std::size_t i = 0; i < problem.n; ++i) sum += problem.upper[i] - problem.lower[i];
    return sum / static_cast<double>(problem.n);
}

void push_ancestor(VieUnit& unit, const RankedSolution& r) {
    unit.ancestors.push_back(r);
    while (unit.ancestors.size() > VieUnit::kAncestorDepth) unit.ancestors.pop_front();
}

void note_update(VieUnit& unit) {
    if (++unit.updates_since_refresh >= VieUnit::kInverseRefreshPeriod) refresh_inverse(unit);
}

// q = A^{-T} w, i.e. the row vector w^T A^{-1}.
Vector left_multiply(const Matrix& m, std::span<const double> w) {
    const std::size_t n = m.size();
    Vector q(n, 0.0);
    const auto& k = kernels::active();
    for (std::size_t i = 0; i < n; ++i) k.axpy(q.data(), w[i], m.row(i), n);
    return q;
}

}  // namespace

VieConstants VieConstants::for_dimension(std::size_t n) {
    const double nd = static_cast<double>(n);
    VieConstants k;
    k.c = 2.0 / (nd + 2.0);
    k.c_c = 1.0 / (nd + 2.0);
    k.c_p = 1.0 / 12.0;
    k.d = 1.0 + nd / 2.0;
    k.B = 0.1 / (nd + 2.0);
    k.c_cov_plus = 2.0 / (nd * nd + 6.0);
    k.c_cov_minus = 0.4 / (std::pow(nd, 1.6) + 1.0);
    k.p_thresh = 0.44;
    k.p_target = 2.0 / 11.0;
    return k;
}

VieUnit make_unit(const ProblemSpec& problem, const Evaluation& parent) {
    const std::size_t n = problem.n;
    VieUnit u;
    u.x = parent.x;
    u.f_x = parent.f;
    u.g_x = parent.g;
    u.violation_x = parent.violation;
    u.constants = VieConstants::for_dimension(n);

    const double width = mean_width(problem);
    u.sigma = 0.3 * width;
    Vector diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = (problem.upper[i] - problem.lower[i]) / width;
    u.A = Matrix::diagonal(diag);
    for (double& d : diag) d = 1.0 / d;
    u.A_inv = Matrix::diagonal(diag);

    u.s.assign(n, 0.0);
    u.v.assign(problem.m, Vector(n, 0.0));
    u.p_succ = u.constants.p_target;
    u.p_succ_j.assign(problem.m, 1.0);
    u.b.resize(problem.m);
    for (std::size_t j = 0; j < problem.m; ++j) u.b[j] = std::max(0.0, parent.g[j]);
    if (parent.feasible()) u.b_f = parent.f;
    push_ancestor(u, u.ranked());
    return u;
}

VieUnit init_unit(const ProblemSpec& problem, Rng& rng, EvaluationCounter& counter) {
    Vector x(problem.n);
    for (std::size_t i = 0; i < problem.n; ++i) x[i] = rng.uniform(problem.lower[i], problem.upper[i]);
    return make_unit(problem, evaluate(problem, x, counter));
}

Vector offspring_point(const VieUnit& unit, std::span<const double> z) {
    Vector y = multiply(unit.A, z);
    kernels::active().scale(y.data(), unit.sigma, y.size());
    kernels::active().axpy(y.data(), 1.0, unit.x.data(), y.size());
    return y;
}

Offspring sample_offspring(const VieUnit& unit, const ProblemSpec& problem, Rng& rng) {
    const std::size_t n = unit.dim();
    Offspring o;
    o.z.resize(n);
    for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
        for (double& zi : o.z) zi = rng.normal();
        o.y = offspring_point(unit, o.z);
        if (within_box(problem, o.y)) return o;
    }
    for (std::size_t i = 0; i < n; ++i) o.y[i] = std::clamp(o.y[i], problem.lower[i], problem.upper[i]);
    return o;
}

void update_step_size(VieUnit& unit) {
    const auto& k = unit.constants;
    const double p = unit.p_succ;
    const double exponent = (p - (k.p_target / (1.0 - k.p_target)) * (1.0 - p)) / k.d;
    unit.sigma = std::clamp(unit.sigma * std::exp(exponent), kSigmaMin, kSigmaMax);
}

std::optional<Matrix> cholesky_rank_one_update(const Matrix& A, double alpha, double beta,
                                               std::span<const double> direction) {
    const auto A_inv = inverse(A);
    if (!A_inv) return std::nullopt;
    const Vector w = multiply(*A_inv, direction);
    const double ww = dot(w, w);
    const double sa = std::sqrt(alpha);
    Matrix out = A;
    if (ww == 0.0) {
        kernels::active().scale(out.data(), sa, A.size() * A.size());
        return out;
    }
    const double arg = 1.0 + (beta / alpha) * ww;
    if (beta < 0.0 && arg <= kDowndateFloor) return std::nullopt;
    const double k = sa / ww * (std::sqrt(arg) - 1.0);
    kernels::active().scaled_ger(out.data(), sa, k, direction.data(), w.data(), A.size());
    return out;
}

bool apply_rank_one_update(VieUnit& unit, double alpha, double beta, std::span<const double> direction) {
    const std::size_t n = unit.dim();
    const auto& kt = kernels::active();
    const Vector w = multiply(unit.A_inv, direction);
    const double ww = dot(w, w);
    const double sa = std::sqrt(alpha);
    if (ww == 0.0) {
        kt.scale(unit.A.data(), sa, n * n);
        kt.scale(unit.A_inv.data(), 1.0 / sa, n * n);
        return true;
    }
    const double arg = 1.0 + (beta / alpha) * ww;
    if (beta < 0.0 && arg <= kDowndateFloor) {
        ++unit.diagnostics.skipped_downdates;
        return false;
    }
    const double r = std::sqrt(arg);
    const double c = (r - 1.0) / ww;
    const Vector q = left_multiply(unit.A_inv, w);
    kt.scaled_ger(unit.A.data(), sa, sa * c, direction.data(), w.data(), n);
    // (A + c d w^T)^{-1} = A^{-1} - c/(1 + c|w|^2) w (w^T A^{-1}), and 1 + c|w|^2 = r.
    kt.scaled_ger(unit.A_inv.data(), 1.0 / sa, -c / (r * sa), w.data(), q.data(), n);
    note_update(unit);
    return true;
}

void on_success_covariance_update(VieUnit& unit, std::span<const double> z) {
    const auto& k = unit.constants;
    const auto& kt = kernels::active();
    const std::size_t n = unit.dim();
    double alpha = 1.0 - k.c_cov_plus;
    kt.scale(unit.s.data(), 1.0 - k.c, n);
    if (unit.p_succ < k.p_thresh) {
        const Vector az = multiply(unit.A, z);
        kt.axpy(unit.s.data(), std::sqrt(k.c * (2.0 - k.c)), az.data(), n);
    } else {
        alpha += k.c_cov_plus * k.c * (2.0 - k.c);
    }
    apply_rank_one_update(unit, alpha, k.c_cov_plus, unit.s);
}

bool fifth_ancestor_active_update(VieUnit& unit, std::span<const double> z, const RankedSolution& offspring) {
    if (unit.ancestors.size() < VieUnit::kAncestorDepth) return false;
    if (!deb_better(unit.ancestors.front(), offspring)) return false;
    const auto& k = unit.constants;
    const Vector az = multiply(unit.A, z);
    return apply_rank_one_update(unit, std::sqrt(1.0 + k.c_cov_minus), -k.c_cov_minus, az);
}

namespace {

// Constraint-direction core: fade each selected accumulator toward A z, then subtract the
// averaged rank-one terms computed with the pre-update A^{-1}.
void direction_downdate(VieUnit& unit, std::span<const double> az, const std::vector<Vector*>& dirs) {
    const std::size_t n = unit.dim();
    const auto& kt = kernels::active();
    const auto& k = unit.constants;
    if (dirs.empty()) return;

    Matrix delta(n, 0.0);
    std::size_t applied = 0;
    Vector last_w;
    double last_ww = 0.0;
    const double strength = k.B / static_cast<double>(dirs.size());
    for (Vector* vp : dirs) {
        Vector& vj = *vp;
        kt.scale(vj.data(), 1.0 - k.c_c, n);
        kt.axpy(vj.data(), k.c_c, az.data(), n);
        Vector w = multiply(unit.A_inv, vj);
        const double ww = dot(w, w);
        if (ww < kDirectionFloor) {
            ++unit.diagnostics.skipped_direction_terms;
            continue;
        }
        kt.scaled_ger(delta.data(), 1.0, -strength / ww, vj.data(), w.data(), n);
        ++applied;
        last_ww = ww;
        last_w = std::move(w);
    }
    if (applied == 0) return;
    kt.axpy(unit.A.data(), 1.0, delta.data(), n * n);

    if (applied == 1) {
        // A' = A - (B'/|w|^2) v w^T with w = A^{-1} v; Sherman-Morrison gives
        // A'^{-1} = A^{-1} + B'/(|w|^2 (1 - B')) w (w^T A^{-1}).
        const Vector q = left_multiply(unit.A_inv, last_w);
        kt.scaled_ger(unit.A_inv.data(), 1.0, strength / (last_ww * (1.0 - strength)), last_w.data(), q.data(), n);
        note_update(unit);
    } else {
        refresh_inverse(unit);
    }
}

}  // namespace

void constraint_direction_update(VieUnit& unit, std::span<const double> z, const std::vector<bool>& exceeded) {
    std::vector<Vector*> dirs;
    for (std::size_t j = 0; j < exceeded.size(); ++j)
        if (exceeded[j]) dirs.push_back(&unit.v[j]);
    if (dirs.empty()) return;
    direction_downdate(unit, multiply(unit.A, z), dirs);
}

void update_boundaries(VieUnit& unit, const Evaluation& eval) {
    for (std::size_t j = 0; j < unit.b.size(); ++j) {
        const double bj = unit.b[j];
        const double gj = eval.g[j];
        unit.b[j] = std::max(0.0, std::min(bj, gj + (bj - gj) / 2.0));
    }
    if (eval.feasible()) unit.b_f = eval.f;
}

void viability_probability_update(VieUnit& unit, OutcomeKind kind, const std::vector<bool>& exceeded) {
    const double cp = unit.constants.c_p;
    switch (kind) {
        case OutcomeKind::ViableAccepted:
            unit.p_succ = (1.0 - cp) * unit.p_succ + cp;
            for (double& p : unit.p_succ_j) p = (1.0 - cp) * p + cp;
            break;
        case OutcomeKind::ViableRejected:
            unit.p_succ = (1.0 - cp) * unit.p_succ;
            break;
        case OutcomeKind::BoundaryViolated: {
            for (std::size_t j = 0; j < unit.p_succ_j.size(); ++j) {
                if (exceeded[j]) unit.p_succ_j[j] *= 1.0 - cp;
            }
            const bool any_low = std::any_of(unit.p_succ_j.begin(), unit.p_succ_j.end(),
                                             [](double p) { return p < 0.5; });
            if (any_low) unit.p_succ = (1.0 - cp) * unit.p_succ;
            break;
        }
    }
    unit.p_succ = std::clamp(unit.p_succ, 0.0, 1.0);
}

double condition_number(const Matrix& A) {
    const Matrix C = gram(A);
    const Vector eig = symmetric_eigenvalues(C);
    if (eig.front() <= 0.0) return std::numeric_limits<double>::infinity();
    return eig.back() / eig.front();
}

bool check_convergence(VieUnit& unit) {
    const std::size_t n = unit.dim();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, dot({unit.A.row(i), n}, {unit.A.row(i), n}));

    bool converged = false;
    if (unit.iterations > n) {
        const double path = unit.accepted_steps > 0 ? norm(unit.s) : std::sqrt(max_diag);
        converged = path * unit.sigma < kPathTolerance;
    }
    if (!converged && max_diag * unit.sigma > kMaxScaledVariance) converged = true;
    if (!converged) {
        // cond(A A^T) <= (|A|_F |A^{-1}|_F)^2; the eigen-decomposition only runs
        // when this cheap bound is inconclusive.
        const double bound = frobenius_norm(unit.A) * frobenius_norm(unit.A_inv);
        if (!(bound * bound <= kMaxCondition) && condition_number(unit.A) > kMaxCondition) converged = true;
    }
    if (converged) unit.active = false;
    return converged;
}

double boundary_shifted_violation(const VieUnit& unit, std::span<const double> g) {
    double total = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) total += std::max(0.0, g[j] - unit.b[j]);
    return total;
}

void refresh_inverse(VieUnit& unit) {
    if (auto inv = inverse(unit.A)) {
        unit.A_inv = std::move(*inv);
    } else {
        unit.active = false;
    }
    unit.updates_since_refresh = 0;
    ++unit.diagnostics.inverse_refreshes;
}

StepOutcome local_step_with(VieUnit& unit, const ProblemSpec& problem, const Offspring& offspring,
                            EvaluationCounter& counter) {
    StepOutcome out;
    out.evaluation = evaluate(problem, offspring.y, counter);
    const Evaluation& e = out.evaluation;

    std::vector<bool> exceeded(problem.m, false);
    bool any_exceeded = false;
    for (std::size_t j = 0; j < problem.m; ++j) {
        exceeded[j] = e.g[j] > unit.b[j];
        any_exceeded = any_exceeded || exceeded[j];
    }

    OutcomeKind kind;
    if (any_exceeded) {
        out.boundary_violated = true;
        constraint_direction_update(unit, offspring.z, exceeded);
        kind = OutcomeKind::BoundaryViolated;
    } else {
        const bool objective_viable = !unit.b_f || e.f <= *unit.b_f;
        // Deb order on raw values; the shifted pair reduces to f alone once
        // every boundary holds, which stalls units that start infeasible.
        out.accepted = objective_viable && deb_compare({e.f, e.violation}, unit.ranked()) != Ordering::BBetter;
        if (out.accepted) {
            unit.x = e.x;
            unit.f_x = e.f;
            unit.g_x = e.g;
            unit.violation_x = e.violation;
            ++unit.accepted_steps;
            push_ancestor(unit, unit.ranked());
            update_boundaries(unit, e);
            on_success_covariance_update(unit, offspring.z);
            kind = OutcomeKind::ViableAccepted;
        } else {
            fifth_ancestor_active_update(unit, offspring.z, RankedSolution{e.f, e.violation});
            kind = OutcomeKind::ViableRejected;
        }
    }
    viability_probability_update(unit, kind, exceeded);
    update_step_size(unit);
    ++unit.iterations;
    out.converged_now = unit.active ? check_convergence(unit) : true;
    return out;
}

StepOutcome local_step(VieUnit& unit, const ProblemSpec& problem, Rng& rng, EvaluationCounter& counter) {
    if (counter.exhausted()) throw BudgetExhausted();
    return local_step_with(unit, problem, sample_offspring(unit, problem, rng), counter);
}

}  // namespace mvie
