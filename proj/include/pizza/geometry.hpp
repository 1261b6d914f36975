#pragma once
/**
 * @file   geometry.hpp
 * @brief  Closed-form sector areas of a circle cut by concurrent chords through an interior pole.
 *
 * The circle has radius a and its center sits at polar position (r0, theta0) as seen from the
 * pole. Every chord passes through the pole, so a fan of n chords splits the disk into 2n
 * sectors bounded by rays from the pole. Angles are unwrapped reals throughout; nothing is
 * reduced mod 2π internally.
 */

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace pizza {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Circle of radius a whose center lies at polar (r0, theta0) relative to the pole.
class CircleConfig
{
public:
    /// Throws DomainError unless a > 0, 0 <= r0 < a and theta0 is finite.
    CircleConfig(double a, double r0, double theta0);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double r0() const noexcept { return r0_; }
    [[nodiscard]] double theta0() const noexcept { return theta0_; }

    bool operator==(const CircleConfig&) const = default;

private:
    double a_;
    double r0_;
    double theta0_;
};

/// n chord directions, strictly increasing and confined to an open half-turn.
class ChordFan
{
public:
    /// Throws DomainError on an empty list, non-increasing angles, or a span of π or more.
    explicit ChordFan(std::vector<double> base_angles);

    [[nodiscard]] std::span<const double> angles() const noexcept { return angles_; }
    [[nodiscard]] std::size_t size() const noexcept { return angles_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return angles_[i]; }

    bool operator==(const ChordFan&) const = default;

private:
    std::vector<double> angles_;
};

/// The 2n sector boundaries (φ1..φn, φ1+π..φn+π). Sector i spans [θi, θi+1]; the last wraps to θ1+2π.
class SectorPartition
{
public:
    [[nodiscard]] std::span<const double> boundaries() const noexcept { return boundaries_; }
    [[nodiscard]] std::size_t sector_count() const noexcept { return boundaries_.size(); }
    [[nodiscard]] std::size_t chord_count() const noexcept { return boundaries_.size() / 2; }

    /// Lower and upper ray of sector i (0-based).
    [[nodiscard]] double lower(std::size_t i) const { return boundaries_[i]; }
    [[nodiscard]] double upper(std::size_t i) const;

    bool operator==(const SectorPartition&) const = default;

private:
    friend SectorPartition build_partition(const ChordFan& fan);
    explicit SectorPartition(std::vector<double> boundaries) : boundaries_(std::move(boundaries)) {}

    std::vector<double> boundaries_;
};

struct AreaReport
{
    std::vector<double> sector_areas;
    double odd_sum = 0.0;   ///< S1 + S3 + ...
    double even_sum = 0.0;  ///< S2 + S4 + ...
    double total = 0.0;

    bool operator==(const AreaReport&) const = default;
};

/// Distance from the pole to the circle along direction theta.
[[nodiscard]] double radial_distance(const CircleConfig& cfg, double theta) noexcept;

/// x = arcsin((r0/a) sin(theta - theta0)); odd under theta -> theta + π.
[[nodiscard]] double substituted_angle(const CircleConfig& cfg, double theta) noexcept;

/// Exact area ½∫ r²(θ) dθ over [theta_a, theta_b]. Requires theta_a < theta_b <= theta_a + 2π.
[[nodiscard]] double sector_area_closed(const CircleConfig& cfg, double theta_a, double theta_b);

[[nodiscard]] SectorPartition build_partition(const ChordFan& fan);

/// Assembles sector areas and alternating sums from precomputed per-sector areas.
[[nodiscard]] AreaReport make_area_report(std::vector<double> sector_areas);

[[nodiscard]] AreaReport area_report(const CircleConfig& cfg, const SectorPartition& part);

/// Area of the sector [theta_a, theta_b] plus its antipodal twin; requires 0 < theta_b - theta_a < π.
[[nodiscard]] double opposite_pair_sum(const CircleConfig& cfg, double theta_a, double theta_b);

/// Angle reduced to [0, 2π), for display only.
[[nodiscard]] double reduce_angle(double theta) noexcept;

}  // namespace pizza
