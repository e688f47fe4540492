#include "mses/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace mses {

Partition classify(const PointCloud& cloud, const SphereCandidate& s,
                   double eps_on) {
    Partition part;
    part.inside.reserve(cloud.size());
    const double threshold = s.radius * (1.0 + eps_on) + eps_on;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        if (distance(cloud[i], s.center) <= threshold)
            part.inside.push_back(i);
        else
            part.outside.push_back(i);
    }
    return part;
}

Aabb bounding_box(const PointCloud& cloud) {
    if (cloud.empty())
        throw std::invalid_argument("bounding_box: empty input");
    Aabb box{cloud.front(), cloud.front()};
    for (const Point3& p : cloud) {
        box.min.x = std::min(box.min.x, p.x);
        box.min.y = std::min(box.min.y, p.y);
        box.min.z = std::min(box.min.z, p.z);
        box.max.x = std::max(box.max.x, p.x);
        box.max.y = std::max(box.max.y, p.y);
        box.max.z = std::max(box.max.z, p.z);
    }
    return box;
}

}  // namespace mses
