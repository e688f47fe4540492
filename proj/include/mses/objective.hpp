#pragma once

#include "mses/geometry.hpp"

namespace mses {

/// Coefficients of the fitness J = -lambda*|inside| + alpha*r + beta*LMS.
///
/// Defaults are tuning knobs, not constants from any reference: they are
/// calibrated so that on the default synthetic shell clouds the optimizer
/// trades away roughly the outermost few percent of points.
struct Weights {
    double lambda = 1.0;  ///< reward per enclosed point
    double alpha = 30.0;  ///< radius penalty
    double beta = 0.5;    ///< penalty weight on the excluded-point LMS

    /// Throws std::invalid_argument when any weight is negative,
    /// non-finite, or all three are zero.
    void validate() const;
};

/// Term-by-term decomposition of one fitness evaluation.
struct ObjectiveBreakdown {
    double j = 0.0;          ///< total fitness
    int inside_count = 0;    ///< |P_inside|
    double radius_term = 0.0;  ///< alpha * r
    double lms = 0.0;          ///< mean squared surface distance of excluded points
    double lms_term = 0.0;     ///< beta * lms
};

/// Mean of (||p - C|| - r)^2 over the outside points of the partition.
/// Returns 0 when nothing is outside. Throws std::invalid_argument on
/// partition indices out of range ("inconsistent partition").
double lms_error(const PointCloud& cloud, const Partition& partition,
                 const SphereCandidate& s);

/// Classifies the cloud against the sphere and assembles the full fitness
/// breakdown. Pure and deterministic.
ObjectiveBreakdown evaluate(const PointCloud& cloud, const SphereCandidate& s,
                            const Weights& w);

}  // namespace mses
