#pragma once

#include <cstdint>
#include <random>

#include "orchard/config.hpp"

namespace orchard {

/// Deterministic RNG. Draws are hand-rolled on top of the mt19937_64 raw
/// stream so results do not depend on library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], unbiased via rejection.
    long uniform(long lo, long hi);

    /// Uniform element index for a container of given size.
    std::size_t index(std::size_t size) {
        return static_cast<std::size_t>(uniform(0, static_cast<long>(size) - 1));
    }

private:
    std::mt19937_64 eng_;
};

inline constexpr int kDefaultRetries = 1000;

/// Generic configuration with integer coordinates in [-coord_bound,
/// coord_bound], reproducible from the seed. Offending points are
/// rejection-resampled; throws retry_exhausted when the budget (total
/// resamples) runs out, which signals coord_bound too small for n and d.
Configuration random_generic(int n, int d, std::uint64_t seed, long coord_bound = 100,
                             int retries = kDefaultRetries);

/// Perturbs every coordinate by (1/2^40) * r with r a seeded random integer
/// in [-2^20, 2^20], then re-tests genericity; retries with fresh draws up
/// to the budget. Results are perturbation-dependent by nature.
Configuration perturb_generic(const Configuration& cfg, std::uint64_t seed,
                              int retries = kDefaultRetries);

} // namespace orchard
