#pragma once

// Benchmark problems: boxed, inequality-constrained minimization
//
//     min f(x)  s.t.  g_j(x) <= 0,  j = 1..m,   lower <= x <= upper
//
// plus the evaluation counter that every function evaluation in the system
// goes through.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvie/matrix.hpp"

namespace mvie {

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

class ProblemNotFound : public std::out_of_range {
public:
    explicit ProblemNotFound(const std::string& name) : std::out_of_range("unknown problem: " + name) {}
};

using ObjectiveFn = std::function<double(std::span<const double>)>;
using ConstraintFn = std::function<void(std::span<const double>, std::span<double>)>;

enum class ProblemFamily { Cec2006, Engineering };

struct ProblemSpec {
    std::string name;
    std::size_t n = 0;
    std::size_t m = 0;
    Vector lower;
    Vector upper;
    ObjectiveFn objective;
    ConstraintFn constraints;  // writes m values, g_j <= 0 is satisfied
    double f_star = 0.0;
    std::optional<Vector> x_star;
    int active_at_optimum = 0;
    int linear_constraints = 0;
    int nonlinear_constraints = 0;
    ProblemFamily family = ProblemFamily::Cec2006;
};

struct Evaluation {
    Vector x;
    double f = 0.0;
    Vector g;
    double violation = 0.0;
    std::uint64_t nfes_index = 0;  // 1-based

    bool feasible() const { return violation == 0.0; }
};

// Per-run evaluation accounting. Not thread-safe; a run owns its counter.
class EvaluationCounter {
public:
    explicit EvaluationCounter(std::uint64_t budget) : budget_(budget) {}

    std::uint64_t count() const { return count_; }
    std::uint64_t budget() const { return budget_; }
    std::uint64_t remaining() const { return budget_ - count_; }
    bool exhausted() const { return count_ >= budget_; }

    // Reserves the next evaluation index; throws BudgetExhausted at the budget.
    std::uint64_t next();

private:
    std::uint64_t budget_;
    std::uint64_t count_ = 0;
};

// Sum of positive parts of g.
double constraint_violation(std::span<const double> g);

// Evaluates f and g at x, consuming exactly one unit of the counter.
// Throws std::domain_error when x is outside the box. A NaN objective or
// constraint value is reported as +infinity.
Evaluation evaluate(const ProblemSpec& problem, std::span<const double> x, EvaluationCounter& counter);

// Evaluation without accounting, for self-checks and reports.
Evaluation evaluate_uncounted(const ProblemSpec& problem, std::span<const double> x);

bool within_box(const ProblemSpec& problem, std::span<const double> x);

struct BestKnownCheck {
    bool has_x_star = false;
    bool in_box = false;
    double objective_error = 0.0;  // |f(x*) - f*|
    double max_constraint = 0.0;   // max_j g_j(x*)
    bool ok = false;
};

inline constexpr double kBestKnownTolerance = 1e-8;

BestKnownCheck check_best_known(const ProblemSpec& problem);

// The 13 inequality-only CEC 2006 problems followed by the four engineering
// problems. Built once; every bundled x* is verified on first access and a
// failure throws std::logic_error.
const std::vector<ProblemSpec>& registry();

const ProblemSpec& lookup(const std::string& name);

}  // namespace mvie
