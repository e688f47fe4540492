#include "mses/objective.hpp"
#include "mses/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace mses;

namespace {

PointCloud ring_cloud(int n, double r, const Point3& c) {
    PointCloud cloud;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * i / n;
        cloud.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a), c.z});
    }
    return cloud;
}

}  // namespace

TEST_CASE("lms_error") {
    const SphereCandidate s{{0, 0, 0}, 1.0};

    SUBCASE("zero when everything is inside") {
        const PointCloud cloud{{0.1, 0, 0}, {0, 0.5, 0}};
        CHECK(lms_error(cloud, classify(cloud, s), s) == 0.0);
    }
    SUBCASE("one point at distance r + 2") {
        const PointCloud cloud{{3, 0, 0}};
        CHECK(lms_error(cloud, classify(cloud, s), s) == doctest::Approx(4.0));
    }
    SUBCASE("two points at r + 1 and r + 3") {
        const PointCloud cloud{{2, 0, 0}, {0, 4, 0}};
        CHECK(lms_error(cloud, classify(cloud, s), s) == doctest::Approx(5.0));
    }
    SUBCASE("out-of-range partition index is rejected") {
        Partition bad;
        bad.outside = {5};
        CHECK_THROWS_WITH_AS(lms_error({{0, 0, 0}}, bad, s),
                             "inconsistent partition", std::invalid_argument);
    }
}

TEST_CASE("evaluate identities") {
    SUBCASE("pure enclosure reward") {
        const PointCloud cloud = ring_cloud(10, 0.5, {0, 0, 0});
        const ObjectiveBreakdown b =
            evaluate(cloud, {{0, 0, 0}, 1.0}, {1.0, 0.0, 0.0});
        CHECK(b.inside_count == 10);
        CHECK(b.j == doctest::Approx(-10.0));
    }
    SUBCASE("pure radius term") {
        const ObjectiveBreakdown b =
            evaluate({{0, 0, 0}}, {{9, 9, 9}, 7.45}, {0.0, 1.0, 0.0});
        CHECK(b.j == doctest::Approx(7.45));
    }
    SUBCASE("linear recomposition") {
        // 5 inside, r = 2, LMS = 0.5: two outside points at r +- ... chosen
        // so the squared surface distances average to 0.5.
        PointCloud cloud = ring_cloud(5, 1.0, {0, 0, 0});
        const double d = std::sqrt(0.5);
        cloud.push_back({2.0 + d, 0, 0});
        cloud.push_back({0, -(2.0 + d), 0});
        const ObjectiveBreakdown b =
            evaluate(cloud, {{0, 0, 0}, 2.0}, {1.0, 1.0, 1.0});
        CHECK(b.inside_count == 5);
        CHECK(b.lms == doctest::Approx(0.5));
        CHECK(b.j == doctest::Approx(-5.0 + 2.0 + 0.5));
    }
}

TEST_CASE("breakdown recomposes exactly") {
    CounterRng rng(3);
    PointCloud cloud;
    for (int i = 0; i < 50; ++i)
        cloud.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3),
                         rng.uniform(-3, 3)});
    const Weights w{0.7, 1.3, 0.25};
    const SphereCandidate s{{0.5, -0.2, 0.1}, 1.7};
    const ObjectiveBreakdown b = evaluate(cloud, s, w);
    CHECK(b.j == doctest::Approx(-w.lambda * b.inside_count + b.radius_term +
                                 b.lms_term)
                     .epsilon(1e-14));
}

TEST_CASE("J is linear in the weights at a fixed partition") {
    const PointCloud cloud = ring_cloud(20, 3.0, {1, 1, 0});
    const SphereCandidate s{{1, 1, 0}, 2.0};
    const Weights w{1.0, 2.0, 0.5};
    const Weights w2{2.0, 4.0, 1.0};
    const ObjectiveBreakdown a = evaluate(cloud, s, w);
    const ObjectiveBreakdown b = evaluate(cloud, s, w2);
    CHECK(b.radius_term == doctest::Approx(2.0 * a.radius_term));
    CHECK(b.lms_term == doctest::Approx(2.0 * a.lms_term));
    CHECK(b.j == doctest::Approx(2.0 * a.j));
}

TEST_CASE("inside_count is non-decreasing in the radius") {
    const PointCloud cloud = ring_cloud(30, 2.0, {0, 0, 0});
    int previous = -1;
    for (double r = 0.0; r <= 4.0; r += 0.25) {
        const int count =
            evaluate(cloud, {{0.3, 0, 0}, r}, {1, 1, 1}).inside_count;
        CHECK(count >= previous);
        previous = count;
    }
}

TEST_CASE("LMS is invariant under rigid motion of cloud and sphere") {
    PointCloud cloud = ring_cloud(12, 4.0, {0, 0, 0});
    const SphereCandidate s{{0.2, 0.1, 0}, 2.5};
    const double reference = evaluate(cloud, s, {1, 1, 1}).lms;

    // Translate, then rotate 90 degrees about z, applied jointly.
    const Point3 shift{10, -3, 7};
    PointCloud moved;
    for (const Point3& p : cloud)
        moved.push_back({-(p.y + shift.y), p.x + shift.x, p.z + shift.z});
    const SphereCandidate moved_sphere{
        {-(s.center.y + shift.y), s.center.x + shift.x, s.center.z + shift.z},
        s.radius};
    CHECK(evaluate(moved, moved_sphere, {1, 1, 1}).lms ==
          doctest::Approx(reference).epsilon(1e-12));
}

TEST_CASE("with only the radius weight active, r = 0 is optimal at fixed C") {
    const PointCloud cloud = ring_cloud(8, 1.0, {0, 0, 0});
    const Weights w{0.0, 1.0, 0.0};
    const double at_zero = evaluate(cloud, {{0, 0, 0}, 0.0}, w).j;
    for (double r : {0.1, 0.5, 1.0, 2.0})
        CHECK(at_zero < evaluate(cloud, {{0, 0, 0}, r}, w).j);
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS((Weights{-1.0, 1.0, 1.0}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((Weights{0.0, 0.0, 0.0}.validate()),
                    std::invalid_argument);
    CHECK_NOTHROW(Weights{}.validate());
}
