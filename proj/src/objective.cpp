#include "mses/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace mses {

void Weights::validate() const {
    const bool finite = std::isfinite(lambda) && std::isfinite(alpha) &&
                        std::isfinite(beta);
    if (!finite || lambda < 0.0 || alpha < 0.0 || beta < 0.0)
        throw std::invalid_argument(
            "weights must be finite and non-negative");
    if (lambda == 0.0 && alpha == 0.0 && beta == 0.0)
        throw std::invalid_argument("weights must not all be zero");
}

double lms_error(const PointCloud& cloud, const Partition& partition,
                 const SphereCandidate& s) {
    if (partition.outside.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t idx : partition.outside) {
        if (idx >= cloud.size())
            throw std::invalid_argument("inconsistent partition");
        const double d = distance(cloud[idx], s.center) - s.radius;
        sum += d * d;
    }
    return sum / static_cast<double>(partition.outside.size());
}

ObjectiveBreakdown evaluate(const PointCloud& cloud, const SphereCandidate& s,
                            const Weights& w) {
    const Partition part = classify(cloud, s);
    ObjectiveBreakdown out;
    out.inside_count = static_cast<int>(part.inside.size());
    out.radius_term = w.alpha * s.radius;
    out.lms = lms_error(cloud, part, s);
    out.lms_term = w.beta * out.lms;
    out.j = -w.lambda * out.inside_count + out.radius_term + out.lms_term;
    return out;
}

}  // namespace mses
