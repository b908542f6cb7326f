#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mclab/errors.hpp"
#include "mclab/geometry.hpp"
#include "mclab/rng.hpp"

using namespace mclab;

namespace {

// Random non-degenerate triangle with vertices in [-1, 1]^2.
Triangle random_triangle(RngStream& rng) {
    for (;;) {
        const Triangle t{{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                         {rng.uniform(-1, 1), rng.uniform(-1, 1)},
                         {rng.uniform(-1, 1), rng.uniform(-1, 1)}};
        if (!is_degenerate(t)) return t;
    }
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("side_lengths of reference triangles") {
    const SideLengths right = side_lengths({{0, 0}, {1, 0}, {0, 1}});
    CHECK(right.s == doctest::Approx(1.0));
    CHECK(right.m == doctest::Approx(1.0));
    CHECK(right.l == doctest::Approx(std::numbers::sqrt2));

    const SideLengths equi =
        side_lengths({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
    CHECK(equi.s == doctest::Approx(1.0));
    CHECK(equi.m == doctest::Approx(1.0));
    CHECK(equi.l == doctest::Approx(1.0));

    const SideLengths pyth = side_lengths({{0, 0}, {4, 0}, {4, 3}});
    CHECK(pyth.s == doctest::Approx(3.0));
    CHECK(pyth.m == doctest::Approx(4.0));
    CHECK(pyth.l == doctest::Approx(5.0));
}

TEST_CASE("side_lengths rejects degenerate input") {
    CHECK_THROWS_AS(side_lengths({{0, 0}, {1, 0}, {2, 0}}),
                    DegenerateTriangleError);
}

TEST_CASE("classify reference shapes") {
    CHECK(classify({3, 4, 5}) == TriangleClass::right);
    CHECK(classify({1, 1, 1}) == TriangleClass::acute);
    CHECK(classify({2, 2, 3}) == TriangleClass::obtuse);
}

TEST_CASE("ratios") {
    const SideRatios equi = ratios({1, 1, 1});
    CHECK(equi.sdm == 1.0);
    CHECK(equi.mdl == 1.0);

    const SideRatios pyth = ratios({3, 4, 5});
    CHECK(pyth.sdm == doctest::Approx(0.75));
    CHECK(pyth.mdl == doctest::Approx(0.8));
}

TEST_CASE("is_degenerate") {
    CHECK(is_degenerate({{0, 0}, {1, 0}, {2, 0}}));
    CHECK_FALSE(is_degenerate({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(is_degenerate({{0, 0}, {1, 0}, {0.5, 1e-15}}));
    // the tolerance applies to twice the area
    CHECK_FALSE(is_degenerate({{0, 0}, {1, 0}, {0.5, 1e-15}}, 1e-16));
}

TEST_CASE("polar conversions") {
    const PolarPoint east = to_polar({1, 0});
    CHECK(east.rho == doctest::Approx(1.0));
    CHECK(east.theta == doctest::Approx(0.0));

    const PolarPoint north = to_polar({0, 1});
    CHECK(north.rho == doctest::Approx(1.0));
    CHECK(north.theta == doctest::Approx(std::numbers::pi / 2));

    SUBCASE("theta lands in (-pi, pi]") {
        CHECK(to_polar({-1, 0}).theta == doctest::Approx(std::numbers::pi));
        CHECK(to_polar({-1, -0.0}).theta == doctest::Approx(std::numbers::pi));
        CHECK(to_polar({-1, -1e-9}).theta < 0.0);
    }

    SUBCASE("round trip") {
        const Point2 p{-0.3, 0.4};
        const Point2 q = from_polar(to_polar(p));
        CHECK(q.x == doctest::Approx(p.x).epsilon(1e-12));
        CHECK(q.y == doctest::Approx(p.y).epsilon(1e-12));
    }
}

TEST_CASE("randomized invariants") {
    RngStream rng(101);
    for (int i = 0; i < 5000; ++i) {
        const Triangle t = random_triangle(rng);
        const SideLengths sl = side_lengths(t);

        // ordering and strict triangle inequality
        REQUIRE(sl.s > 0.0);
        REQUIRE(sl.s <= sl.m);
        REQUIRE(sl.m <= sl.l);
        REQUIRE(sl.s + sl.m > sl.l);

        // m/l > 1/2 is forced by the triangle inequality
        const SideRatios r = ratios(sl);
        REQUIRE(r.sdm > 0.0);
        REQUIRE(r.sdm <= 1.0);
        REQUIRE(r.mdl > 0.5);
        REQUIRE(r.mdl <= 1.0);
    }
}

TEST_CASE("classify is scale invariant") {
    RngStream rng(202);
    for (int i = 0; i < 2000; ++i) {
        const SideLengths sl = side_lengths(random_triangle(rng));
        const double k = rng.uniform(1e-3, 1e3);
        const SideLengths scaled{k * sl.s, k * sl.m, k * sl.l};
        REQUIRE(classify(scaled) == classify(sl));
    }
}

TEST_CASE("classify agrees with the largest-angle oracle") {
    RngStream rng(303);
    for (int i = 0; i < 5000; ++i) {
        const SideLengths sl = side_lengths(random_triangle(rng));
        // law of cosines on the angle opposite the longest side
        const double cos_largest =
            (sl.s * sl.s + sl.m * sl.m - sl.l * sl.l) / (2.0 * sl.s * sl.m);
        const double largest = std::acos(cos_largest);
        const bool obtuse_by_angle = largest > std::numbers::pi / 2.0;
        REQUIRE(obtuse_by_angle == (classify(sl) == TriangleClass::obtuse));
    }
}

}  // TEST_SUITE
