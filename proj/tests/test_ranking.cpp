#include <doctest.h>

#include <cmath>
#include <limits>

#include "mvie/ranking.hpp"
#include "mvie/rng.hpp"

using namespace mvie;

namespace {

RankedSolution random_solution(Rng& rng) {
    // Coarse values so that ties show up regularly.
    const double f = std::floor(rng.uniform(-5.0, 5.0));
    const double v = rng.uniform() < 0.4 ? 0.0 : std::floor(rng.uniform(0.0, 4.0));
    return {f, v};
}

// a at least as good as b
bool weakly_better(const RankedSolution& a, const RankedSolution& b) {
    return deb_compare(a, b) != Ordering::BBetter;
}

}  // namespace

TEST_CASE("the three feasibility rules") {
    CHECK(deb_compare({10, 0}, {1, 5}) == Ordering::ABetter);
    CHECK(deb_compare({2, 0}, {3, 0}) == Ordering::ABetter);
    CHECK(deb_compare({1, 7}, {9, 4}) == Ordering::BBetter);
    CHECK(deb_compare({1, 0}, {1, 0}) == Ordering::Tie);
    CHECK(deb_compare({1, 2}, {5, 2}) == Ordering::Tie);
}

TEST_CASE("NaN inputs are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(deb_compare({nan, 0}, {1, 0}), InvalidSolution);
    CHECK_THROWS_AS(deb_compare({1, 0}, {1, nan}), InvalidSolution);
}

TEST_CASE("rank_population is a stable sort") {
    const std::vector<RankedSolution> a{{5, 0}, {3, 0}, {1, 2}};
    CHECK(rank_population(a) == std::vector<std::size_t>{1, 0, 2});
    CHECK(rank_population(std::vector<RankedSolution>{{1, 1}}) == std::vector<std::size_t>{0});
    const std::vector<RankedSolution> same(6, RankedSolution{2, 0});
    CHECK(rank_population(same) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(rank_population(std::vector<RankedSolution>{}), std::invalid_argument);
}

TEST_CASE("deb_compare is a total preorder") {
    Rng rng(17);
    for (int i = 0; i < 10000; ++i) {
        const auto a = random_solution(rng), b = random_solution(rng), c = random_solution(rng);
        // antisymmetry
        const Ordering ab = deb_compare(a, b), ba = deb_compare(b, a);
        CHECK((ab == Ordering::ABetter) == (ba == Ordering::BBetter));
        CHECK((ab == Ordering::Tie) == (ba == Ordering::Tie));
        // transitivity of the weak order
        if (weakly_better(a, b) && weakly_better(b, c)) CHECK(weakly_better(a, c));
        if (deb_better(a, b) && deb_better(b, c)) CHECK(deb_better(a, c));
        // feasibility dominance
        if (a.violation == 0 && b.violation > 0) CHECK(ab == Ordering::ABetter);
    }
}

TEST_CASE("positive scaling of objectives leaves the ranking unchanged") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        std::vector<RankedSolution> items(8), scaled(8);
        const double k = rng.uniform(0.01, 100.0);
        for (std::size_t i = 0; i < items.size(); ++i) {
            items[i] = random_solution(rng);
            scaled[i] = {items[i].f * k, items[i].violation};
        }
        CHECK(rank_population(items) == rank_population(scaled));
    }
}
