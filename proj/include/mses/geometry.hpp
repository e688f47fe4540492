#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace mses {

/// A point in 3D Euclidean space.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Point3 operator*(double s, const Point3& p) {
    return {s * p.x, s * p.y, s * p.z};
}

inline double dot(const Point3& a, const Point3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Point3& p) { return std::sqrt(dot(p, p)); }

/// Euclidean distance between two points.
inline double distance(const Point3& p, const Point3& q) { return norm(p - q); }

/// Ordered sequence of points. Indices are stable identifiers; duplicates
/// are legal and counted with multiplicity.
using PointCloud = std::vector<Point3>;

/// Candidate sphere: center C and radius r >= 0.
struct SphereCandidate {
    Point3 center;
    double radius = 0.0;
};

/// Index split of a cloud against a candidate sphere.
/// inside and outside together cover {0..n-1} exactly once.
struct Partition {
    std::vector<std::size_t> inside;
    std::vector<std::size_t> outside;
};

/// Axis-aligned bounding box, min <= max componentwise.
struct Aabb {
    Point3 min;
    Point3 max;

    double diagonal() const { return distance(min, max); }
};

/// Splits the cloud by sphere membership. A point counts as inside when
/// its distance to the center is <= r*(1 + eps_on) + eps_on, so points on
/// the surface land inside and floating-point noise is absorbed.
Partition classify(const PointCloud& cloud, const SphereCandidate& s,
                   double eps_on = 1e-12);

/// Componentwise min/max over all points. Throws on an empty cloud.
Aabb bounding_box(const PointCloud& cloud);

}  // namespace mses
