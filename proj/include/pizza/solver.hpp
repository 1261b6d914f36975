#pragma once
/**
 * @file   solver.hpp
 * @brief  Balanced-configuration search: bracketed root refinement, analytic pole-radius
 *         inversion, and dense residual sweeps.
 */

#include "pizza/conditions.hpp"
#include "pizza/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pizza {

enum class FreeParameter
{
    angle,
    pole_radius,
};

struct SolveRequest
{
    CircleConfig cfg;  ///< r0 is ignored when the pole radius is free
    std::vector<double> angles;
    CaseTag case_tag = CaseTag::eight;
    FreeParameter free_parameter = FreeParameter::angle;
    std::size_t free_index = 0;  ///< 0-based index into angles, for a free angle
    double lo = 0.0;
    double hi = 0.0;
    double tol = 1e-12;
    int max_iterations = 200;
};

struct SolveOutcome
{
    double root = 0.0;
    double residual_at_root = 0.0;
    int iterations = 0;
    double oracle_check = 0.0;  ///< quadrature-based residual at the root
    double lo = 0.0;
    double hi = 0.0;
};

/// Safeguarded secant/bisection on the corrected residual over [lo, hi]; either parameter kind.
[[nodiscard]] SolveOutcome solve_bracketed(const SolveRequest& req);

/// solve_bracketed restricted to a free boundary angle.
[[nodiscard]] SolveOutcome solve_free_angle(const SolveRequest& req);

/// Closed root r0 = a·sqrt(−2L/K) of (r0²/2)K + a²L for the four- and eight-sector cases.
[[nodiscard]] SolveOutcome solve_pole_radius(std::span<const double> angles, double theta0, double a, CaseTag tag);

/// Sign-change bracket from a uniform 64-point scan of the free angle's admissible interval.
/// Heuristic: the residual need not be monotone, and a missed double root yields nullopt.
[[nodiscard]] std::optional<std::pair<double, double>> scan_free_angle_bracket(const CircleConfig& cfg,
                                                                              std::span<const double> angles,
                                                                              CaseTag tag,
                                                                              std::size_t free_index,
                                                                              int points = 64);

/// Open interval the free angle may occupy without breaking the chord ordering.
[[nodiscard]] std::pair<double, double> free_angle_window(std::span<const double> angles, std::size_t free_index);

/// Quadrature-based balance residual; independent of the closed forms.
[[nodiscard]] double quadrature_residual(const CircleConfig& cfg, const ChordFan& fan);

struct GridAxis
{
    std::string name;  ///< "a", "r0", "theta0", or "theta<k>" with k 1-based
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 1;

    [[nodiscard]] double at(std::size_t i) const noexcept;
};

struct ResidualGrid
{
    std::vector<GridAxis> axes;
    std::vector<double> values;  ///< row-major, last axis fastest; NaN marks inadmissible points
};

struct SweepTemplate
{
    double a = 1.0;
    double r0 = 0.0;
    double theta0 = 0.0;
    std::vector<double> angles;
};

/// Throws DomainError on an empty axis list, a zero-count axis or an unknown axis name.
[[nodiscard]] ResidualGrid sweep_grid(const SweepTemplate& base, std::span<const GridAxis> axes, CaseTag tag);

}  // namespace pizza
