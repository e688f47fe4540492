#include "mses/cloud_gen.hpp"

#include "mses/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mses {

void ShellSpec::validate() const {
    if (!(radius > 0.0))
        throw std::invalid_argument("shell: radius must be positive");
    if (n_points < 1)
        throw std::invalid_argument("shell: n_points must be >= 1");
    if (!(sigma >= 0.0))
        throw std::invalid_argument("shell: sigma must be non-negative");
}

PointCloud generate_shell(const ShellSpec& spec) {
    spec.validate();
    CounterRng rng(spec.seed);
    PointCloud cloud;
    cloud.reserve(static_cast<std::size_t>(spec.n_points));
    for (int i = 0; i < spec.n_points; ++i) {
        Point3 dir;
        double len;
        do {
            dir = {rng.gaussian(), rng.gaussian(), rng.gaussian()};
            len = norm(dir);
        } while (len < 1e-12);
        const Point3 on_surface = spec.center + (spec.radius / len) * dir;
        const Point3 noise{spec.sigma * rng.gaussian(),
                           spec.sigma * rng.gaussian(),
                           spec.sigma * rng.gaussian()};
        cloud.push_back(on_surface + noise);
    }
    return cloud;
}

PointCloud generate_two_sphere(double r_a, int n_per_shell, double sigma,
                               std::uint64_t seed) {
    ShellSpec a{{0.0, 0.0, 0.0}, r_a, n_per_shell, sigma, seed};
    ShellSpec b{{r_a / 2.0, r_a / 2.0, r_a / 2.0}, r_a, n_per_shell, sigma,
                seed + 1};
    PointCloud cloud = generate_shell(a);
    const PointCloud second = generate_shell(b);
    cloud.insert(cloud.end(), second.begin(), second.end());
    return cloud;
}

}  // namespace mses
