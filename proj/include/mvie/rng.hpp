#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace mvie {

// One seeded stream per run. The distribution transforms are written out here
// rather than taken from <random> so that a seed produces the same numbers
// with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Uniform integer in [0, n).
    std::size_t index(std::size_t n);
    // Standard normal (Box-Muller, one value per call).
    double normal();

private:
    std::mt19937_64 engine_;
};

}  // namespace mvie
