#include "mses/welzl.hpp"

#include "mses/rng.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mses {

namespace {

constexpr double kDegenerateTol = 1e-10;
// Relative tolerance of the "outside the current ball" test. Looser than
// machine epsilon so boundary ties do not re-enter the recursion.
constexpr double kInsideTol = 1e-10;

bool enclosed(const Point3& p, const SphereCandidate& s) {
    return distance(p, s.center) <= s.radius * (1.0 + kInsideTol);
}

double max_support_distance(const Point3& c, const SupportSet& support) {
    double r = 0.0;
    for (const Point3& p : support) r = std::max(r, distance(p, {c.x, c.y, c.z}));
    return r;
}

SphereCandidate circumsphere3(const Point3& p1, const Point3& p2,
                              const Point3& p3) {
    const Point3 a = p2 - p1;
    const Point3 b = p3 - p1;
    const Point3 axb = cross(a, b);
    const double n2 = dot(axb, axb);
    const double la = norm(a), lb = norm(b);
    if (std::sqrt(n2) <= kDegenerateTol * la * lb || n2 == 0.0)
        throw degenerate_support();
    const Point3 u = dot(a, a) * b - dot(b, b) * a;
    const Point3 center = p1 + (1.0 / (2.0 * n2)) * cross(u, axb);
    return {center, max_support_distance(center, {p1, p2, p3})};
}

SphereCandidate circumsphere4(const SupportSet& s) {
    // Equidistance to p1 vs p2..p4 reduces to a 3x3 linear system:
    //   2 (p_k - p1) . C = |p_k|^2 - |p1|^2
    double A[3][3];
    double rhs[3];
    double scale = 0.0;
    for (int k = 0; k < 3; ++k) {
        const Point3 d = s[k + 1] - s[0];
        scale = std::max(scale, norm(d));
        A[k][0] = 2.0 * d.x;
        A[k][1] = 2.0 * d.y;
        A[k][2] = 2.0 * d.z;
        rhs[k] = dot(s[k + 1], s[k + 1]) - dot(s[0], s[0]);
    }
    const double det =
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
        A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
        A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    const double cube = 2.0 * scale;
    if (std::abs(det) <= kDegenerateTol * cube * cube * cube || det == 0.0)
        throw degenerate_support();

    auto cramer = [&](int col) {
        double M[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) M[r][c] = (c == col) ? rhs[r] : A[r][c];
        return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
               M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
               M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    };
    const Point3 center{cramer(0) / det, cramer(1) / det, cramer(2) / det};
    return {center, max_support_distance(center, s)};
}

/// circumsphere() with the documented fallback: on a degenerate
/// configuration, use the smallest lower-cardinality circumsphere that
/// still encloses every support point.
SphereCandidate sphere_from_support(const SupportSet& support) {
    try {
        return circumsphere(support);
    } catch (const degenerate_support&) {
    }
    const std::size_t n = support.size();
    SphereCandidate best{{0, 0, 0}, -1.0};
    // Subsets by bitmask, preferring higher cardinality implicitly via the
    // smallest-enclosing criterion.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        SupportSet sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(support[i]);
        SphereCandidate cand;
        try {
            cand = circumsphere(sub);
        } catch (const degenerate_support&) {
            continue;
        }
        bool all_in = true;
        for (const Point3& p : support)
            if (!enclosed(p, cand)) { all_in = false; break; }
        if (all_in && (best.radius < 0.0 || cand.radius < best.radius))
            best = cand;
    }
    if (best.radius < 0.0) throw degenerate_support();
    return best;
}

struct Ball {
    SphereCandidate sphere;
    SupportSet support;
};

Ball make_ball(const SupportSet& support) {
    return {sphere_from_support(support), support};
}

/// Smallest sphere enclosing pts[0..n) with `boundary` pinned to the
/// surface. Recursion depth is bounded by the support cardinality; the
/// offending point is moved to the front after each repair.
Ball welzl_recurse(std::vector<Point3>& pts, std::size_t n,
                   const SupportSet& boundary) {
    Ball ball = make_ball(boundary);
    if (boundary.size() == 4) return ball;
    for (std::size_t i = 0; i < n; ++i) {
        if (enclosed(pts[i], ball.sphere)) continue;
        SupportSet next = boundary;
        next.push_back(pts[i]);
        ball = welzl_recurse(pts, i, next);
        std::rotate(pts.begin(), pts.begin() + i, pts.begin() + i + 1);
    }
    return ball;
}

}  // namespace

SphereCandidate circumsphere(const SupportSet& support) {
    switch (support.size()) {
        case 0:
            return {{0.0, 0.0, 0.0}, 0.0};
        case 1:
            return {support[0], 0.0};
        case 2: {
            const Point3 mid = 0.5 * (support[0] + support[1]);
            return {mid, 0.5 * distance(support[0], support[1])};
        }
        case 3:
            return circumsphere3(support[0], support[1], support[2]);
        case 4:
            return circumsphere4(support);
        default:
            throw std::invalid_argument("circumsphere: support larger than 4");
    }
}

WelzlResult welzl_ses(const PointCloud& cloud, std::uint64_t seed) {
    if (cloud.empty())
        throw std::invalid_argument("welzl_ses: empty input");
    std::vector<Point3> pts = cloud;
    CounterRng rng(seed);
    for (std::size_t i = pts.size() - 1; i > 0; --i)
        std::swap(pts[i], pts[rng.uniform_index(i + 1)]);

    Ball ball = welzl_recurse(pts, pts.size(), {});
    if (ball.support.empty()) {
        // Whole cloud coincides with the zero sphere at the origin.
        ball.sphere = {pts.front(), 0.0};
        ball.support = {pts.front()};
    }
    return {ball.sphere, ball.support};
}

SphereCandidate brute_force_ses(const PointCloud& cloud) {
    if (cloud.empty())
        throw std::invalid_argument("brute_force_ses: empty input");
    if (cloud.size() > 60)
        throw std::invalid_argument("brute_force_ses: oracle size limit");

    const std::size_t n = cloud.size();
    SphereCandidate best{{0, 0, 0}, -1.0};
    auto consider = [&](const SupportSet& sub) {
        SphereCandidate cand;
        try {
            cand = circumsphere(sub);
        } catch (const degenerate_support&) {
            return;
        }
        if (best.radius >= 0.0 && cand.radius >= best.radius) return;
        const double limit = cand.radius * (1.0 + 1e-9);
        for (const Point3& p : cloud)
            if (distance(p, cand.center) > limit) return;
        best = cand;
    };

    for (std::size_t i = 0; i < n; ++i) {
        consider({cloud[i]});
        for (std::size_t j = i + 1; j < n; ++j) {
            consider({cloud[i], cloud[j]});
            for (std::size_t k = j + 1; k < n; ++k) {
                consider({cloud[i], cloud[j], cloud[k]});
                for (std::size_t l = k + 1; l < n; ++l)
                    consider({cloud[i], cloud[j], cloud[k], cloud[l]});
            }
        }
    }
    return best;
}

ValidationReport validate_sphere(const PointCloud& cloud,
                                 const SphereCandidate& s, double eps) {
    ValidationReport report;
    if (cloud.empty()) {
        report.enclosed_fraction = 1.0;
        return report;
    }
    const double band = eps * std::max(s.radius, 1.0);
    double max_violation = -std::numeric_limits<double>::infinity();
    std::size_t enclosed_count = 0;
    for (const Point3& p : cloud) {
        const double d = distance(p, s.center);
        max_violation = std::max(max_violation, d - s.radius);
        if (d <= s.radius * (1.0 + eps)) ++enclosed_count;
        if (std::abs(d - s.radius) <= band) ++report.boundary_count;
    }
    report.max_violation = max_violation;
    report.enclosed_fraction =
        static_cast<double>(enclosed_count) / static_cast<double>(cloud.size());
    return report;
}

}  // namespace mses
