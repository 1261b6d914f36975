#include "pizza/errors.hpp"
#include "pizza/geometry.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace pizza;
using doctest::Approx;

TEST_CASE("CircleConfig rejects a pole on or outside the circle")
{
    CHECK_THROWS_AS(CircleConfig(1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(CircleConfig(1.0, 1.5, 0.0), DomainError);
    CHECK_THROWS_AS(CircleConfig(0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(CircleConfig(1.0, -0.1, 0.0), DomainError);
    CHECK_THROWS_AS(CircleConfig(1.0, 0.1, std::nan("")), DomainError);
    CHECK_NOTHROW(CircleConfig(1.0, 0.999, 0.0));
    CHECK(CircleConfig(1.0, 0.2, 7.0).theta0() == 7.0);
}

TEST_CASE("radial_distance")
{
    CHECK(radial_distance({2.0, 0.0, 0.0}, 1.3) == Approx(2.0).epsilon(1e-15));
    const CircleConfig cfg(1.0, 0.5, 0.0);
    CHECK(radial_distance(cfg, 0.0) == Approx(1.5).epsilon(1e-15));
    CHECK(radial_distance(cfg, pi) == Approx(0.5).epsilon(1e-15));
    CHECK(radial_distance(cfg, pi / 2) == Approx(std::sqrt(0.75)).epsilon(1e-15));

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const CircleConfig c(1.3, 1.2, u(rng));
        const double t = u(rng);
        CHECK(testing::rel_diff(radial_distance(c, t + two_pi), radial_distance(c, t)) <= 1e-13);
        CHECK(radial_distance(c, t) > 0.0);
        CHECK(testing::rel_diff(radial_distance(c, t), testing::ray_length(1.3, 1.2, c.theta0(), t)) <= 1e-13);
    }
}

TEST_CASE("substituted_angle")
{
    CHECK(substituted_angle({1.0, 0.0, 0.3}, 1.1) == 0.0);
    CHECK(substituted_angle({1.0, 0.7, 0.3}, 0.3) == 0.0);
    CHECK(substituted_angle({1.0, 0.5, 0.0}, pi / 2) == Approx(pi / 6).epsilon(1e-15));

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const CircleConfig c(1.0, 0.9, u(rng));
        const double t = u(rng);
        CHECK(std::abs(substituted_angle(c, t + pi) + substituted_angle(c, t)) <= 1e-15);
        CHECK(std::abs(substituted_angle(c, t)) < pi / 2);
    }
}

TEST_CASE("sector_area_closed examples")
{
    CHECK(sector_area_closed({1.0, 0.0, 0.0}, 0.0, pi / 2) == Approx(pi / 4).epsilon(1e-15));
    CHECK(sector_area_closed({1.0, 0.5, 0.0}, 0.0, pi) == Approx(pi / 2).epsilon(1e-15));
    // Frozen from a 30-digit mpmath quadrature of ½∫r²dθ.
    CHECK(sector_area_closed({1.0, 0.5, 0.0}, 0.0, pi / 2) == Approx(1.2637039021427074).epsilon(1e-14));
    CHECK(sector_area_closed({1.5, 1.2, 2.0}, 1.0, 3.5) == Approx(6.1619814878504923).epsilon(1e-14));
}

TEST_CASE("sector_area_closed rejects malformed sectors")
{
    const CircleConfig cfg(1.0, 0.3, 0.0);
    CHECK_THROWS_AS((void)sector_area_closed(cfg, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS((void)sector_area_closed(cfg, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS((void)sector_area_closed(cfg, 0.0, two_pi + 1e-9), DomainError);
    CHECK_NOTHROW((void)sector_area_closed(cfg, 0.0, two_pi));
}

TEST_CASE("sector_area_closed properties")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double a = 0.5 + 1.5 * u(rng);
        const CircleConfig cfg(a, 0.95 * a * u(rng), 10.0 * (u(rng) - 0.5));
        const double ta = 10.0 * (u(rng) - 0.5);
        const double tc = ta + two_pi * u(rng) + 1e-3;
        const double tb = ta + (tc - ta) * u(rng);
        const double disk = pi * a * a;

        CHECK(testing::rel_diff(sector_area_closed(cfg, ta, ta + two_pi), disk) <= 1e-12);
        if (tc - ta <= two_pi && tb > ta && tc > tb) {
            const double whole = sector_area_closed(cfg, ta, tc);
            const double parts = sector_area_closed(cfg, ta, tb) + sector_area_closed(cfg, tb, tc);
            CHECK(testing::rel_diff(parts, whole) <= 1e-12);
            CHECK(testing::rel_diff(whole, testing::reference_area(a, cfg.r0(), cfg.theta0(), ta, tc)) <= 1e-9);
        }

        const double tiny = 1e-12 * u(rng) + 1e-15;
        const double sliver = sector_area_closed(cfg, ta, ta + tiny);
        CHECK(sliver >= 0.0);
        CHECK(sliver <= 2.0 * a * a * tiny + 1e-15 * a * a);  // r < a + r0 < 2a
    }
}

TEST_CASE("build_partition")
{
    const auto four = build_partition(ChordFan({0.0, pi / 2}));
    REQUIRE(four.sector_count() == 4);
    CHECK(four.boundaries()[2] == pi);
    CHECK(four.boundaries()[3] == Approx(3 * pi / 2));
    CHECK(four.upper(3) == two_pi);

    const auto eight = build_partition(ChordFan({0.0, pi / 4, pi / 2, 3 * pi / 4}));
    REQUIRE(eight.sector_count() == 8);
    CHECK(eight.boundaries()[4] == eight.boundaries()[0] + pi);
    CHECK(eight.boundaries()[7] == Approx(7 * pi / 4));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(eight.boundaries()[i + 4] - eight.boundaries()[i] == pi);

    CHECK_THROWS_AS(ChordFan({0.0, pi}), DomainError);
    CHECK_THROWS_AS(ChordFan({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(ChordFan({0.5, 0.2}), DomainError);
    CHECK_THROWS_AS(ChordFan(std::vector<double>{}), DomainError);
}

TEST_CASE("area_report")
{
    const auto centered = area_report({1.0, 0.0, 0.0}, build_partition(ChordFan({0.0, pi / 2})));
    for (double s : centered.sector_areas)
        CHECK(s == Approx(pi / 4).epsilon(1e-15));
    CHECK(centered.odd_sum == Approx(pi / 2));
    CHECK(centered.even_sum == Approx(pi / 2));

    const auto pizza = area_report({1.0, 0.6, 0.3}, build_partition(ChordFan({0.0, pi / 4, pi / 2, 3 * pi / 4})));
    CHECK(std::abs(pizza.odd_sum - pi / 2) <= 1e-12);
    CHECK(std::abs(pizza.even_sum - pi / 2) <= 1e-12);
    double odd_reference = 0.0;
    const auto part = build_partition(ChordFan({0.0, pi / 4, pi / 2, 3 * pi / 4}));
    for (std::size_t i = 0; i < 8; i += 2)
        odd_reference += testing::reference_area(1.0, 0.6, 0.3, part.lower(i), part.upper(i));
    CHECK(std::abs(odd_reference - pi / 2) <= 1e-11);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = 0.5 + 1.5 * u(rng);
        const CircleConfig cfg(a, 0.95 * a * u(rng), 6.0 * u(rng));
        const auto report = area_report(cfg, build_partition(ChordFan(testing::random_fan(rng, 1 + i % 6))));
        for (double s : report.sector_areas)
            CHECK(s >= 0.0);
        CHECK(testing::rel_diff(report.odd_sum + report.even_sum, report.total) <= 1e-12);
        CHECK(testing::rel_diff(report.total, pi * a * a) <= 1e-10);
    }
}

TEST_CASE("opposite_pair_sum")
{
    CHECK(opposite_pair_sum({2.0, 0.0, 0.0}, 0.2, 1.4) == Approx(4.0 * 1.2));
    CHECK(opposite_pair_sum({1.0, 0.7, 0.0}, 0.0, pi / 2) == Approx(pi / 2).epsilon(1e-15));

    const CircleConfig cfg(1.0, 0.5, 0.2);
    const double pair = sector_area_closed(cfg, 0.1, 0.9) + sector_area_closed(cfg, 0.1 + pi, 0.9 + pi);
    CHECK(testing::rel_diff(opposite_pair_sum(cfg, 0.1, 0.9), pair) <= 1e-12);
    const double reference =
        testing::reference_area(1.0, 0.5, 0.2, 0.1, 0.9) + testing::reference_area(1.0, 0.5, 0.2, 0.1 + pi, 0.9 + pi);
    CHECK(testing::rel_diff(opposite_pair_sum(cfg, 0.1, 0.9), reference) <= 1e-10);

    CHECK_THROWS_AS((void)opposite_pair_sum(cfg, 0.0, pi), DomainError);
    CHECK_THROWS_AS((void)opposite_pair_sum(cfg, 0.5, 0.5), DomainError);
}

TEST_CASE("reduce_angle")
{
    CHECK(reduce_angle(-0.5) == Approx(two_pi - 0.5));
    CHECK(reduce_angle(7.0) == Approx(7.0 - two_pi));
    CHECK(reduce_angle(0.0) == 0.0);
}
