#pragma once

#include "mses/geometry.hpp"

#include <cstdint>

namespace mses {

/// Parameters of one synthetic noisy spherical shell.
struct ShellSpec {
    Point3 center{0.0, 0.0, 0.0};
    double radius = 7.0;
    int n_points = 634;
    double sigma = 0.7;  ///< per-coordinate Gaussian noise scale
    std::uint64_t seed = 0;

    void validate() const;
};

/// Samples n_points uniformly on the sphere surface (normalized Gaussian
/// directions), then adds isotropic Gaussian noise with per-coordinate
/// standard deviation sigma. Deterministic given the seed.
PointCloud generate_shell(const ShellSpec& spec);

/// Two identical shells: one at the origin, one shifted by
/// (r_a/2, r_a/2, r_a/2). The first shell's points come first and are
/// bit-identical to generate_shell with the same seed; the second shell
/// uses seed + 1.
PointCloud generate_two_sphere(double r_a, int n_per_shell, double sigma,
                               std::uint64_t seed);

}  // namespace mses
