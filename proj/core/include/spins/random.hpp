#pragma once

#include <cstdint>
#include <random>

#include "spins/vec.hpp"

namespace spins {

/// Deterministic random stream owned by a single chain.
///
/// All variate transforms (uniform, normal, gamma) are implemented directly
/// on top of the raw Mersenne Twister output, so a given (seed, call
/// sequence) pair reproduces bit-identical values on any platform. The
/// standard library distribution objects are deliberately not used; their
/// algorithms are implementation-defined.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw on [0, 1) with 53 random bits.
    double uniform();

    /// Uniform draw on [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal draw (Marsaglia polar method, spare value cached).
    double normal();

    double normal(double mean, double sd);

    /// Gamma draw with the given shape and unit scale (Marsaglia-Tsang).
    /// Valid for any shape > 0.
    double gamma(double shape);

    /// Uniform index in {0, ..., n-1}.
    std::size_t uniform_index(std::size_t n);

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool have_spare_ = false;
};

/// Dirichlet draw with the given concentration vector (all entries > 0).
Vec dirichlet_sample(RandomSource& rng, const Vec& concentration);

}  // namespace spins
