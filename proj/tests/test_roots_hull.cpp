#include <doctest.h>

#include <algorithm>

#include "slicereg/errors.hpp"
#include "slicereg/hull.hpp"
#include "slicereg/rng.hpp"
#include "slicereg/roots.hpp"

using namespace slicereg;

TEST_CASE("complex roots of factored forms") {
    const auto r1 = complex_roots({Complex(-1, 0), Complex(0, 0), Complex(1, 0)});  // z^2 - 1
    REQUIRE(r1.size() == 2);
    CHECK(std::abs(r1[0].z - Complex(-1, 0)) <= 1e-12);
    CHECK(std::abs(r1[1].z - Complex(1, 0)) <= 1e-12);

    // (z-1)(z-2)(z-3) = z^3 - 6 z^2 + 11 z - 6
    const auto r2 = complex_roots({Complex(-6, 0), Complex(11, 0), Complex(-6, 0), Complex(1, 0)});
    REQUIRE(r2.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(r2[k].z - Complex(k + 1, 0)) <= 1e-10);

    const auto r3 = complex_roots({Complex(0, 0), Complex(0, 0), Complex(1, 0)});  // z^2
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].multiplicity == 2);
    CHECK(std::abs(r3[0].z) <= 1e-7);

    CHECK_THROWS_AS(complex_roots({Complex(1, 0), Complex(0, 0)}), DegenerateLeadingCoefficient);
    CHECK_THROWS_AS(complex_roots({Complex(1, 0)}), DegenerateLeadingCoefficient);
}

TEST_CASE("root residual property") {
    Rng rng(97);
    for (int k = 0; k < 100; ++k) {
        const int deg = 1 + static_cast<int>(rng.next() % 12);
        CPoly p(static_cast<std::size_t>(deg) + 1);
        for (auto& c : p) c = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        if (std::abs(p.back()) < 0.1) p.back() += Complex(0.5, 0);
        int total = 0;
        for (const auto& r : complex_roots(p)) {
            total += r.multiplicity;
            const double scale = std::pow(1.0 + std::abs(r.z), deg);
            CHECK(std::abs(cpoly_eval(p, r.z)) <= 1e-9 * scale);
        }
        CHECK(total == deg);
    }
}

TEST_CASE("monic reconstruction from roots") {
    Rng rng(101);
    for (int k = 0; k < 20; ++k) {
        std::vector<RootCluster> roots;
        const int n = 1 + static_cast<int>(rng.next() % 5);
        for (int m = 0; m < n; ++m)
            roots.push_back({Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), 1});
        const CPoly p = monic_from_roots(roots);
        CHECK(p.size() == static_cast<std::size_t>(n) + 1);
        CHECK(std::abs(p.back() - Complex(1, 0)) == 0.0);
        for (const auto& r : roots) CHECK(std::abs(cpoly_eval(p, r.z)) <= 1e-12);
    }
}

TEST_CASE("convex hull basics") {
    const std::vector<Point2> square_plus{{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}};
    auto hull = convex_hull_2d(square_plus);
    REQUIRE(hull.size() == 3);  // the interior point drops out
    std::sort(hull.begin(), hull.end());
    CHECK(hull == std::vector<Point2>{{0, 0}, {0, 1}, {1, 0}});

    CHECK(convex_hull_2d({}).empty());
    CHECK(convex_hull_2d({{0.5, 0.25}}) == std::vector<Point2>{{0.5, 0.25}});
    CHECK(convex_hull_2d({{0.5, 0.25}, {0.5, 0.25}}).size() == 1);

    // collinear input collapses to its endpoints
    const auto seg = convex_hull_2d({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {1.5, 1.5}});
    REQUIRE(seg.size() == 2);
    CHECK(seg[0] == Point2{0, 0});
    CHECK(seg[1] == Point2{3, 3});
}

TEST_CASE("point-hull distance and Hausdorff") {
    const std::vector<Point2> tri{{0, 0}, {2, 0}, {0, 2}};
    CHECK(point_hull_distance({0.5, 0.5}, tri) == 0.0);
    CHECK(point_hull_distance({-1, 0}, tri) == doctest::Approx(1.0));
    CHECK(point_hull_distance({3, 0}, tri) == doctest::Approx(1.0));

    const std::vector<Point2> seg{{0, 0}, {1, 0}};
    CHECK(point_hull_distance({0.5, 0.5}, seg) == doctest::Approx(0.5));
    CHECK(point_hull_distance({2, 0}, seg) == doctest::Approx(1.0));

    const std::vector<Point2> pt{{1, 1}};
    CHECK(point_hull_distance({1, 1}, pt) == 0.0);

    CHECK(hull_hausdorff(tri, tri) == 0.0);
    CHECK(hull_hausdorff({}, {}) == 0.0);
    CHECK(std::isinf(hull_hausdorff(tri, {})));
    const std::vector<Point2> tri2{{0, 0}, {2, 0}, {0, 3}};
    CHECK(hull_hausdorff(tri, tri2) == doctest::Approx(1.0));
}

TEST_CASE("hull matches a brute-force extreme-point scan") {
    // The structured oracle comparison runs in the verification suite; this
    // spot-checks a handful of adversarial layouts.
    Rng rng(103);
    for (int k = 0; k < 10; ++k) {
        std::vector<Point2> pts(24);
        for (auto& p : pts) p = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        auto hull = convex_hull_2d(pts);
        // every input point lies inside the hull
        for (const auto& p : pts) CHECK(point_hull_distance(p, hull) <= 1e-12);
        // every hull vertex is an input point
        for (const auto& v : hull) CHECK(std::count(pts.begin(), pts.end(), v) == 1);
    }
}
