#pragma once

#include "mses/geometry.hpp"
#include "mses/objective.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace mses {

/// Search-space vector: (Cx, Cy, Cz, r).
using Vec4 = std::array<double, 4>;

/// Swarm hyperparameters. Defaults satisfy the convergence gate at both
/// ends of the inertia schedule.
struct SwarmConfig {
    int n_particles = 100;
    double w_start = 0.9;
    double w_end = 0.4;
    double c1 = 1.49445;
    double c2 = 1.49445;
    int max_iters = 1000;
    int stagnation_window = 100;   ///< 0 disables the stagnation stop
    double stagnation_tol = 1e-8;  ///< absolute improvement threshold on J
    double v_max_fraction = 0.2;   ///< velocity cap as a fraction of each range
    bool scalar_random = false;    ///< one r1/r2 pair per particle instead of per dimension
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

/// Position and velocity limits of the 4-D search space.
struct SearchBounds {
    Vec4 pos_lo;
    Vec4 pos_hi;
    Vec4 vel_max;  ///< per-dimension cap; velocity is clamped to [-v, v]
};

struct ParticleState {
    Vec4 position;
    Vec4 velocity;
    Vec4 pbest_position;
    double pbest_fitness;
};

struct SwarmState {
    std::vector<ParticleState> particles;
    Vec4 gbest_position;
    double gbest_fitness;
    ObjectiveBreakdown gbest_eval;
    int iteration = 0;
};

struct TraceRecord {
    int iter;
    double gbest_j;
    int inside_count;
    double radius;
    double lms;
    double lyapunov;
};

enum class Termination { max_iters, stagnation };

const char* to_string(Termination t);

struct SolveResult {
    SphereCandidate sphere;
    ObjectiveBreakdown fitness;
    int iterations_run = 0;
    std::vector<TraceRecord> trace;
    Termination terminated_by = Termination::max_iters;
};

/// Position bounds: the cloud's bounding box expanded by half its
/// diagonal on every side for the center, [0, diagonal] for the radius.
/// Velocity caps are v_max_fraction of the cloud extent per center axis
/// and of the diagonal for the radius. A degenerate single-point cloud
/// falls back to center +-0.5 and radius range [0, 1].
SearchBounds search_bounds(const PointCloud& cloud,
                           double v_max_fraction = 0.2);

/// Uniform positions and velocities within bounds, personal bests at the
/// initial positions, global best at the fittest particle. Fully
/// determined by config.seed.
SwarmState init_swarm(const SwarmConfig& config, const SearchBounds& bounds,
                      const PointCloud& cloud, const Weights& w);

/// Linear inertia schedule from w_start (t = 0) to w_end (t = max_iters).
double inertia_at(int t, const SwarmConfig& config);

/// Number of uniform draws one step consumes: 8 per particle
/// (r1 dims 0..3, then r2 dims 0..3, particles in index order).
std::size_t draws_per_step(const SwarmConfig& config);

/// One synchronous swarm update. `draws` supplies the stochastic factors
/// in the documented order, which makes the update unit-testable with
/// pinned values. The global best seen by every particle is the one from
/// the start of the step.
void step(SwarmState& state, const PointCloud& cloud, const Weights& w,
          const SwarmConfig& config, const SearchBounds& bounds,
          std::span<const double> draws);

/// Contraction condition 0 < w < 1 and 0 < c1 + c2 < 2/(1 - w), checked
/// at both schedule endpoints. Advisory: solve() warns but does not
/// reject configurations that fail it.
bool convergence_gate(const SwarmConfig& config);

/// Mean squared 4-space distance of the particles to the global best;
/// zero exactly when the swarm has collapsed onto it.
double lyapunov(const SwarmState& state);

/// Full optimization run: init, step until max_iters or until the global
/// best improved by less than stagnation_tol over the last
/// stagnation_window iterations. Deterministic given the seed.
SolveResult solve(const PointCloud& cloud, const Weights& w,
                  const SwarmConfig& config);

}  // namespace mses
