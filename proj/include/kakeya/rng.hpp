#pragma once

// Seeded randomness helpers. Everything here is deterministic given the
// seed and independent of platform: we draw raw 64-bit words from
// std::mt19937_64 (fully specified by the standard) and build the
// distributions ourselves instead of going through std::*_distribution,
// whose output is implementation-defined.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>

namespace kakeya {

/// SplitMix64 step; used to derive independent stream seeds from a master
/// seed so parallel tasks get stable seeds regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for logical stream `stream` under `master`. derive_seed(s, a) and
/// derive_seed(s, b) are independent for a != b.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t state = master ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
    splitmix64(state);
    return splitmix64(state);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Standard normal via Box-Muller (no cached spare, so the draw count per
/// call is fixed and replay stays aligned).
inline double gaussian(Rng& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline Eigen::VectorXd gaussian_vector(Rng& rng, int dim) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian(rng);
    return v;
}

/// Uniform point on the unit sphere S^{dim-1}.
inline Eigen::VectorXd uniform_on_sphere(Rng& rng, int dim) {
    Eigen::VectorXd v = gaussian_vector(rng, dim);
    double n = v.norm();
    while (n < 1e-300) {
        v = gaussian_vector(rng, dim);
        n = v.norm();
    }
    return v / n;
}

/// Uniform point in the closed ball B(0, radius) of R^dim.
inline Eigen::VectorXd uniform_in_ball(Rng& rng, int dim, double radius) {
    Eigen::VectorXd dir = uniform_on_sphere(rng, dim);
    double r = radius * std::pow(uniform01(rng), 1.0 / static_cast<double>(dim));
    return r * dir;
}

} // namespace kakeya
