#include "mvie/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mvie {

Ordering deb_compare(const RankedSolution& a, const RankedSolution& b) {
    if (std::isnan(a.f) || std::isnan(b.f) || std::isnan(a.violation) || std::isnan(b.violation))
        throw InvalidSolution();
    const bool fa = a.violation <= 0.0;
    const bool fb = b.violation <= 0.0;
    if (fa != fb) return fa ? Ordering::ABetter : Ordering::BBetter;
    const double ka = fa ? a.f : a.violation;
    const double kb = fa ? b.f : b.violation;
    if (ka < kb) return Ordering::ABetter;
    if (kb < ka) return Ordering::BBetter;
    return Ordering::Tie;
}

std::vector<std::size_t> rank_population(std::span<const RankedSolution> items) {
    if (items.empty()) throw std::invalid_argument("rank_population: empty list");
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return deb_better(items[i], items[j]); });
    return order;
}

}  // namespace mvie
