#include "spins/random.hpp"

#include <cmath>
#include <stdexcept>

namespace spins {

double RandomSource::uniform() {
    // 53 high bits of the engine output, mapped to [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double RandomSource::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * m;
    have_spare_ = true;
    return u * m;
}

double RandomSource::normal(double mean, double sd) {
    return mean + sd * normal();
}

double RandomSource::gamma(double shape) {
    if (!(shape > 0.0)) {
        throw std::invalid_argument("gamma shape must be positive");
    }
    if (shape < 1.0) {
        // Boost the shape by one and correct with a power of a uniform.
        const double g = gamma(shape + 1.0);
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u > 0.0 &&
            std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
            return d * v;
        }
    }
}

std::size_t RandomSource::uniform_index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index needs n > 0");
    }
    // Rejection from the top of the 64-bit range keeps the draw unbiased.
    const std::uint64_t limit =
        std::uint64_t(-1) - (std::uint64_t(-1) % n + 1) % n;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r > limit);
    return static_cast<std::size_t>(r % n);
}

Vec dirichlet_sample(RandomSource& rng, const Vec& concentration) {
    Vec out(concentration.size());
    double total = 0.0;
    for (std::size_t j = 0; j < concentration.size(); ++j) {
        out[j] = rng.gamma(concentration[j]);
        total += out[j];
    }
    for (double& v : out) v /= total;
    return out;
}

}  // namespace spins
