#pragma once

#include "mses/geometry.hpp"

#include <cstdint>
#include <stdexcept>

namespace mses {

/// Boundary points determining a minimal enclosing sphere; at most four
/// in 3D. A single-point cloud degenerates to a one-point support.
using SupportSet = std::vector<Point3>;

/// Raised by circumsphere() on collinear triples / coplanar quadruples.
struct degenerate_support : std::runtime_error {
    degenerate_support() : std::runtime_error("degenerate support") {}
};

/// Smallest sphere with all support points on its boundary.
///   0 points -> radius 0 at the origin
///   1 point  -> radius 0 at the point
///   2 points -> diameter sphere
///   3 points -> circumcircle of the triangle, in its plane
///   4 points -> circumsphere of the tetrahedron
/// Throws degenerate_support when the configuration does not determine a
/// sphere (determinant below 1e-10 relative to the point scale).
SphereCandidate circumsphere(const SupportSet& support);

struct WelzlResult {
    SphereCandidate sphere;
    SupportSet support;
};

/// Exact smallest enclosing sphere via Welzl's move-to-front recursion.
/// The input order is permuted by the seed before processing; the result
/// is order-independent up to floating-point noise. Throws on an empty
/// cloud.
WelzlResult welzl_ses(const PointCloud& cloud, std::uint64_t seed);

/// Exhaustive oracle: enumerates all 1..4-point supports and keeps the
/// smallest enclosing circumsphere. Throws std::invalid_argument for
/// clouds larger than 60 points ("oracle size limit").
SphereCandidate brute_force_ses(const PointCloud& cloud);

struct ValidationReport {
    double max_violation = 0.0;      ///< max over p of ||p - C|| - r
    double enclosed_fraction = 0.0;  ///< fraction with ||p - C|| <= r*(1+eps)
    int boundary_count = 0;          ///< points with | ||p-C|| - r | <= eps*max(r,1)
};

/// Numerical post-validation of a sphere against a cloud.
ValidationReport validate_sphere(const PointCloud& cloud,
                                 const SphereCandidate& s,
                                 double eps = 1e-9);

}  // namespace mses
