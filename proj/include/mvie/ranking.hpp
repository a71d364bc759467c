#pragma once

// Deb's feasibility rules:
//   1. a feasible solution beats an infeasible one;
//   2. two feasible solutions compare by objective;
//   3. two infeasible solutions compare by total violation.

#include <span>
#include <stdexcept>
#include <vector>

namespace mvie {

struct RankedSolution {
    double f = 0.0;
    double violation = 0.0;  // >= 0, 0 means feasible
};

enum class Ordering { ABetter, BBetter, Tie };

class InvalidSolution : public std::invalid_argument {
public:
    InvalidSolution() : std::invalid_argument("NaN objective or violation in comparison") {}
};

Ordering deb_compare(const RankedSolution& a, const RankedSolution& b);

// a strictly better than b
inline bool deb_better(const RankedSolution& a, const RankedSolution& b) {
    return deb_compare(a, b) == Ordering::ABetter;
}

// Stable sort of indices under deb_compare (best first). Throws
// std::invalid_argument on an empty list.
std::vector<std::size_t> rank_population(std::span<const RankedSolution> items);

}  // namespace mvie
