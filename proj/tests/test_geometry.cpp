#include "mses/geometry.hpp"
#include "mses/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace mses;

TEST_CASE("distance basics") {
    CHECK(distance({0, 0, 0}, {3, 4, 0}) == doctest::Approx(5.0));
    CHECK(distance({1, 1, 1}, {1, 1, 1}) == 0.0);
    CHECK(distance({1, 2, 3}, {4, 6, 3}) == doctest::Approx(5.0));
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
    CounterRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Point3 a{rng.uniform(-10, 10), rng.uniform(-10, 10),
                       rng.uniform(-10, 10)};
        const Point3 b{rng.uniform(-10, 10), rng.uniform(-10, 10),
                       rng.uniform(-10, 10)};
        const Point3 c{rng.uniform(-10, 10), rng.uniform(-10, 10),
                       rng.uniform(-10, 10)};
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST_CASE("classify membership") {
    const SphereCandidate unit{{0, 0, 0}, 1.0};

    SUBCASE("strictly inside") {
        const Partition p = classify({{0.5, 0, 0}}, unit);
        CHECK(p.inside == std::vector<std::size_t>{0});
        CHECK(p.outside.empty());
    }
    SUBCASE("strictly outside") {
        const Partition p = classify({{2, 0, 0}}, unit);
        CHECK(p.inside.empty());
        CHECK(p.outside == std::vector<std::size_t>{0});
    }
    SUBCASE("on the surface counts as inside") {
        const Partition p = classify({{1, 0, 0}}, unit, 1e-12);
        CHECK(p.inside == std::vector<std::size_t>{0});
    }
}

TEST_CASE("classify partition is exact and monotone in the radius") {
    CounterRng rng(7);
    PointCloud cloud;
    for (int i = 0; i < 300; ++i)
        cloud.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5),
                         rng.uniform(-5, 5)});
    const Point3 center{rng.uniform(-2, 2), rng.uniform(-2, 2),
                        rng.uniform(-2, 2)};

    std::vector<std::size_t> previous_inside;
    for (double r : {1.0, 2.0, 3.5, 6.0}) {
        const Partition p = classify(cloud, {center, r});
        CHECK(p.inside.size() + p.outside.size() == cloud.size());
        // inside(r') subset of inside(r) for r' < r
        for (std::size_t idx : previous_inside) {
            CHECK(std::find(p.inside.begin(), p.inside.end(), idx) !=
                  p.inside.end());
        }
        previous_inside = p.inside;
    }
}

TEST_CASE("bounding_box") {
    SUBCASE("two points") {
        const Aabb box = bounding_box({{0, 0, 0}, {1, 2, 3}});
        CHECK(box.min.x == 0.0);
        CHECK(box.max.z == 3.0);
    }
    SUBCASE("single point degenerates to a zero box") {
        const Aabb box = bounding_box({{4, 5, 6}});
        CHECK(box.min.x == box.max.x);
        CHECK(box.diagonal() == 0.0);
    }
    SUBCASE("mixed signs") {
        const Aabb box = bounding_box({{-1, 0, 0}, {1, 0, 0}, {0, -1, 1}});
        CHECK(box.min.x == -1.0);
        CHECK(box.min.y == -1.0);
        CHECK(box.min.z == 0.0);
        CHECK(box.max.x == 1.0);
        CHECK(box.max.y == 0.0);
        CHECK(box.max.z == 1.0);
    }
    SUBCASE("empty cloud is rejected") {
        CHECK_THROWS_WITH_AS(bounding_box({}), "bounding_box: empty input",
                             std::invalid_argument);
    }
}
