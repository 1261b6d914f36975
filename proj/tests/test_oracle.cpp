#include "pizza/errors.hpp"
#include "pizza/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace pizza;

TEST_CASE("quadrature_area examples")
{
    const QuadratureSpec tight{1e-12, 40};
    CHECK(std::abs(quadrature_area({1.0, 0.0, 0.0}, 0.0, pi / 2, tight) - pi / 4) <= 1e-12);
    CHECK(std::abs(quadrature_area({1.0, 0.5, 0.0}, 0.0, pi, tight) - pi / 2) <= 1e-12);
}

TEST_CASE("quadrature_area agrees with the closed form")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double a = 0.5 + 1.5 * u(rng);
        const CircleConfig cfg(a, 0.95 * a * u(rng), 8.0 * (u(rng) - 0.5));
        const double lo = 8.0 * (u(rng) - 0.5);
        const double hi = lo + 1e-3 + (two_pi - 1e-3) * u(rng);
        const QuadratureSpec spec = QuadratureSpec::for_circle(cfg);
        const double closed = sector_area_closed(cfg, lo, hi);
        const double quad = quadrature_area(cfg, lo, hi, spec);
        CHECK(std::abs(quad - closed) <= std::max(spec.abs_tol, 1e-9 * closed));
    }
}

TEST_CASE("quadrature_area reports an exhausted depth budget")
{
    CHECK_THROWS_AS((void)quadrature_area({1.0, 0.9, 0.0}, 0.0, 6.0, QuadratureSpec{1e-14, 1}), QuadratureError);
    CHECK_THROWS_AS((void)quadrature_area({1.0, 0.1, 0.0}, 0.0, 1.0, QuadratureSpec{0.0, 10}), DomainError);
    CHECK_THROWS_AS((void)quadrature_area({1.0, 0.1, 0.0}, 1.0, 1.0, QuadratureSpec{}), DomainError);
}

TEST_CASE("montecarlo full-turn sector is the whole disk")
{
    const CircleConfig cfg(1.7, 0.4, 0.2);
    const std::array<double, 1> one{0.3};
    const auto est = montecarlo_sectors(cfg, one, MonteCarloSpec{1000, 5, 1});
    REQUIRE(est.size() == 1);
    CHECK(est[0].area == pi * 1.7 * 1.7);
    CHECK(est[0].std_error == 0.0);
}

TEST_CASE("montecarlo symmetric quarters")
{
    const auto part = build_partition(ChordFan({0.0, pi / 2}));
    const auto est = montecarlo_area({1.0, 0.0, 0.0}, part, MonteCarloSpec{1'000'000, 42, 0});
    double total = 0.0;
    for (const auto& e : est) {
        CHECK(std::abs(e.area - pi / 4) <= 4.0 * e.std_error);
        total += e.area;
    }
    CHECK(std::abs(total - pi) <= 1e-13);
}

TEST_CASE("montecarlo agrees with the closed form off-center")
{
    const CircleConfig cfg(1.0, 0.5, 0.0);
    const auto part = build_partition(ChordFan({0.0, pi / 2}));
    const auto est = montecarlo_area(cfg, part, MonteCarloSpec{1'000'000, 7, 0});
    const auto exact = area_report(cfg, part);
    for (std::size_t i = 0; i < est.size(); ++i)
        CHECK(std::abs(est[i].area - exact.sector_areas[i]) <= 4.0 * est[i].std_error);
}

TEST_CASE("montecarlo is independent of sharding")
{
    const CircleConfig cfg(1.2, 0.8, 1.0);
    const auto part = build_partition(ChordFan({0.1, 0.9, 2.0}));
    const auto serial = montecarlo_area(cfg, part, MonteCarloSpec{200'001, 99, 1});
    for (unsigned shards : {2u, 3u, 7u, 0u}) {
        const auto sharded = montecarlo_area(cfg, part, MonteCarloSpec{200'001, 99, shards});
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].area == sharded[i].area);
            CHECK(serial[i].std_error == sharded[i].std_error);
        }
    }
    const auto other_seed = montecarlo_area(cfg, part, MonteCarloSpec{200'001, 100, 1});
    CHECK(other_seed[0].area != serial[0].area);
}

TEST_CASE("montecarlo input validation")
{
    const CircleConfig cfg(1.0, 0.2, 0.0);
    const std::array<double, 2> bad{0.0, 7.0};
    CHECK_THROWS_AS((void)montecarlo_sectors(cfg, bad, MonteCarloSpec{}), DomainError);
    const std::array<double, 2> ok{0.0, 1.0};
    CHECK_THROWS_AS((void)montecarlo_sectors(cfg, ok, MonteCarloSpec{0, 1, 1}), DomainError);
}

TEST_CASE("splitmix64 reference values")
{
    // First outputs of SplitMix64 seeded with 0 (Vigna's reference implementation).
    CHECK(splitmix64_at(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64_at(0, 1) == 0x6E789E6AA1B965F4ULL);
    CHECK(unit_interval(~0ULL) < 1.0);
    CHECK(unit_interval(0) == 0.0);
}
