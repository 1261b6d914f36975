#pragma once
/**
 * @file   oracle.hpp
 * @brief  Independent numerical estimates of sector areas.
 *
 * Neither routine uses the closed form. The quadrature integrates ½ r²(θ) directly; r² is
 * analytic whenever r0 < a, so the adaptive rule needs no endpoint treatment. Monte Carlo
 * samples the disk uniformly about its own center and bins points by their angle seen from
 * the pole.
 */

#include "pizza/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pizza {

struct QuadratureSpec
{
    double abs_tol = 1e-12;  ///< absolute area tolerance
    int max_depth = 40;

    /// Default tolerance scaled to the circle, 1e-12·a².
    [[nodiscard]] static QuadratureSpec for_circle(const CircleConfig& cfg);
};

struct MonteCarloSpec
{
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    unsigned shards = 0;  ///< worker count; 0 picks hardware concurrency. Never affects results.
};

struct SectorEstimate
{
    double area = 0.0;
    double std_error = 0.0;
};

/// Adaptive Simpson estimate of ½∫ r²(θ) dθ over [theta_a, theta_b]. Throws QuadratureError at max_depth.
[[nodiscard]] double quadrature_area(const CircleConfig& cfg, double theta_a, double theta_b,
                                     const QuadratureSpec& spec);

/// Quadrature estimate of every sector of a partition.
[[nodiscard]] AreaReport quadrature_report(const CircleConfig& cfg, const SectorPartition& part,
                                           const QuadratureSpec& spec);

/// Monte Carlo estimate for sectors between consecutive boundaries; a single boundary is one full-turn sector.
[[nodiscard]] std::vector<SectorEstimate> montecarlo_sectors(const CircleConfig& cfg,
                                                            std::span<const double> boundaries,
                                                            const MonteCarloSpec& spec);

[[nodiscard]] std::vector<SectorEstimate> montecarlo_area(const CircleConfig& cfg, const SectorPartition& part,
                                                         const MonteCarloSpec& spec);

/// SplitMix64 used as a counter-based generator: output k of the stream seeded with `seed`.
[[nodiscard]] std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) noexcept;

/// Uniform double in [0, 1) from the top 53 bits.
[[nodiscard]] double unit_interval(std::uint64_t bits) noexcept;

}  // namespace pizza
