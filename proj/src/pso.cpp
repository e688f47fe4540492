#include "mses/pso.hpp"

#include "mses/rng.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace mses {

namespace {

SphereCandidate decode(const Vec4& x) {
    return {{x[0], x[1], x[2]}, x[3]};
}

double clamp(double v, double lo, double hi) {
    return std::min(std::max(v, lo), hi);
}

}  // namespace

void SwarmConfig::validate() const {
    if (n_particles < 2)
        throw std::invalid_argument("config: n_particles must be >= 2");
    if (!(w_end > 0.0) || !(w_end <= w_start) || !(w_start < 1.0))
        throw std::invalid_argument("config: need 0 < w_end <= w_start < 1");
    if (!(c1 > 0.0) || !(c2 > 0.0))
        throw std::invalid_argument("config: c1 and c2 must be positive");
    if (max_iters < 1)
        throw std::invalid_argument("config: max_iters must be >= 1");
    if (stagnation_window < 0 || !(stagnation_tol >= 0.0))
        throw std::invalid_argument("config: invalid stagnation rule");
    if (!(v_max_fraction > 0.0) || !(v_max_fraction <= 1.0))
        throw std::invalid_argument("config: v_max_fraction must be in (0,1]");
}

const char* to_string(Termination t) {
    return t == Termination::max_iters ? "max_iters" : "stagnation";
}

SearchBounds search_bounds(const PointCloud& cloud, double v_max_fraction) {
    const Aabb box = bounding_box(cloud);
    double diag = box.diagonal();
    Point3 lo = box.min, hi = box.max;
    Point3 extent = box.max - box.min;
    if (diag == 0.0) {
        // All points coincide; give the swarm a unit-scale region.
        lo = lo + Point3{-0.5, -0.5, -0.5};
        hi = hi + Point3{0.5, 0.5, 0.5};
        extent = {1.0, 1.0, 1.0};
        diag = 1.0;
    } else {
        const Point3 pad{0.5 * diag, 0.5 * diag, 0.5 * diag};
        lo = lo - pad;
        hi = hi + pad;
    }
    SearchBounds b;
    b.pos_lo = {lo.x, lo.y, lo.z, 0.0};
    b.pos_hi = {hi.x, hi.y, hi.z, diag};
    // Velocity caps follow the cloud extent, not the padded box. A thin
    // axis (flat or linear cloud) still gets half-diagonal mobility.
    const double floor_ext = 0.5 * diag;
    b.vel_max = {v_max_fraction * std::max(extent.x, floor_ext),
                 v_max_fraction * std::max(extent.y, floor_ext),
                 v_max_fraction * std::max(extent.z, floor_ext),
                 v_max_fraction * diag};
    return b;
}

SwarmState init_swarm(const SwarmConfig& config, const SearchBounds& bounds,
                      const PointCloud& cloud, const Weights& w) {
    SwarmState state;
    state.particles.resize(static_cast<std::size_t>(config.n_particles));
    CounterRng rng(config.seed);
    std::size_t best = 0;
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        ParticleState& p = state.particles[i];
        for (int d = 0; d < 4; ++d)
            p.position[d] = rng.uniform(bounds.pos_lo[d], bounds.pos_hi[d]);
        for (int d = 0; d < 4; ++d)
            p.velocity[d] = rng.uniform(-bounds.vel_max[d], bounds.vel_max[d]);
        p.pbest_position = p.position;
        p.pbest_fitness = evaluate(cloud, decode(p.position), w).j;
        if (p.pbest_fitness < state.particles[best].pbest_fitness) best = i;
    }
    state.gbest_position = state.particles[best].pbest_position;
    state.gbest_fitness = state.particles[best].pbest_fitness;
    state.gbest_eval = evaluate(cloud, decode(state.gbest_position), w);
    state.iteration = 0;
    return state;
}

double inertia_at(int t, const SwarmConfig& config) {
    return config.w_start + (config.w_end - config.w_start) *
                                static_cast<double>(t) /
                                static_cast<double>(config.max_iters);
}

std::size_t draws_per_step(const SwarmConfig& config) {
    return static_cast<std::size_t>(config.n_particles) * 8;
}

void step(SwarmState& state, const PointCloud& cloud, const Weights& w,
          const SwarmConfig& config, const SearchBounds& bounds,
          std::span<const double> draws) {
    if (draws.size() < draws_per_step(config))
        throw std::invalid_argument("step: not enough random draws");
    const double inertia = inertia_at(state.iteration, config);
    const Vec4 g = state.gbest_position;  // frozen for the whole step

    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        ParticleState& p = state.particles[i];
        const double* r1 = draws.data() + i * 8;
        const double* r2 = r1 + 4;
        for (int d = 0; d < 4; ++d) {
            double v = inertia * p.velocity[d] +
                       config.c1 * r1[d] * (p.pbest_position[d] - p.position[d]) +
                       config.c2 * r2[d] * (g[d] - p.position[d]);
            v = clamp(v, -bounds.vel_max[d], bounds.vel_max[d]);
            p.velocity[d] = v;
            p.position[d] = clamp(p.position[d] + v, bounds.pos_lo[d],
                                  bounds.pos_hi[d]);
        }
        const double j = evaluate(cloud, decode(p.position), w).j;
        if (j < p.pbest_fitness) {
            p.pbest_fitness = j;
            p.pbest_position = p.position;
        }
    }

    // Synchronous global-best update, strictly-better replacement.
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.particles.size(); ++i)
        if (state.particles[i].pbest_fitness <
            state.particles[best].pbest_fitness)
            best = i;
    if (state.particles[best].pbest_fitness < state.gbest_fitness) {
        state.gbest_fitness = state.particles[best].pbest_fitness;
        state.gbest_position = state.particles[best].pbest_position;
        state.gbest_eval = evaluate(cloud, decode(state.gbest_position), w);
    }
    ++state.iteration;
}

bool convergence_gate(const SwarmConfig& config) {
    const auto holds = [&](double w) {
        return w > 0.0 && w < 1.0 && config.c1 + config.c2 > 0.0 &&
               config.c1 + config.c2 < 2.0 / (1.0 - w);
    };
    return holds(config.w_start) && holds(config.w_end);
}

double lyapunov(const SwarmState& state) {
    if (state.particles.empty()) return 0.0;
    double sum = 0.0;
    for (const ParticleState& p : state.particles) {
        double sq = 0.0;
        for (int d = 0; d < 4; ++d) {
            const double diff = p.position[d] - state.gbest_position[d];
            sq += diff * diff;
        }
        sum += sq;
    }
    return sum / static_cast<double>(state.particles.size());
}

SolveResult solve(const PointCloud& cloud, const Weights& w,
                  const SwarmConfig& config) {
    config.validate();
    w.validate();
    if (cloud.empty())
        throw std::invalid_argument("solve: empty input");
    if (!convergence_gate(config))
        std::cerr << "warning: PSO parameters fail the contraction "
                     "condition; the swarm may diverge\n";

    const SearchBounds bounds = search_bounds(cloud, config.v_max_fraction);
    SwarmState state = init_swarm(config, bounds, cloud, w);

    SolveResult result;
    auto record = [&]() {
        result.trace.push_back({state.iteration, state.gbest_fitness,
                                state.gbest_eval.inside_count,
                                state.gbest_position[3], state.gbest_eval.lms,
                                lyapunov(state)});
    };
    record();

    // Step draws are pre-generated in the documented order so the update
    // itself stays deterministic under any evaluation schedule. Draw
    // generation continues on the same stream used by init_swarm.
    CounterRng rng(config.seed ^ 0x5bf0f3c0d9f1a2b3ULL);
    std::vector<double> draws(draws_per_step(config));
    result.terminated_by = Termination::max_iters;
    for (int t = 0; t < config.max_iters; ++t) {
        if (config.scalar_random) {
            for (int i = 0; i < config.n_particles; ++i) {
                const double a = rng.uniform();
                const double b = rng.uniform();
                for (int d = 0; d < 4; ++d) draws[i * 8 + d] = a;
                for (int d = 0; d < 4; ++d) draws[i * 8 + 4 + d] = b;
            }
        } else {
            for (double& d : draws) d = rng.uniform();
        }
        step(state, cloud, w, config, bounds, draws);
        record();

        if (config.stagnation_window > 0 &&
            state.iteration >= config.stagnation_window) {
            const double past =
                result.trace[result.trace.size() - 1 -
                             static_cast<std::size_t>(config.stagnation_window)]
                    .gbest_j;
            if (past - state.gbest_fitness < config.stagnation_tol) {
                result.terminated_by = Termination::stagnation;
                break;
            }
        }
    }

    result.iterations_run = state.iteration;
    result.sphere = decode(state.gbest_position);
    result.fitness = state.gbest_eval;
    return result;
}

}  // namespace mses
