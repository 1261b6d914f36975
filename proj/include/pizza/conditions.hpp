#pragma once
/**
 * @file   conditions.hpp
 * @brief  Balance residuals for alternating sector sums and the special-case predicates.
 *
 * A balance residual is odd_sum - πa²/2; it vanishes exactly when S1 + S3 + ... equals
 * S2 + S4 + .... Sector S1 spans [θ1, θ2]. The four-, six- and eight-sector cases use the
 * closed conditions for two, three and four chords; `residual_general` handles any count by
 * summing per-sector closed forms.
 */

#include "pizza/geometry.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace pizza {

enum class CaseTag
{
    four,
    six,
    eight,
    general,
};

enum class Variant
{
    corrected,
    as_printed,
};

[[nodiscard]] std::string_view to_string(CaseTag tag) noexcept;
[[nodiscard]] std::string_view to_string(Variant variant) noexcept;
[[nodiscard]] std::optional<CaseTag> parse_case_tag(std::string_view text) noexcept;

/// Chord count a case requires, or nullopt for `general`.
[[nodiscard]] std::optional<std::size_t> chords_for_case(CaseTag tag) noexcept;

struct ResidualReport
{
    CaseTag case_tag = CaseTag::general;
    Variant variant = Variant::corrected;
    double residual = 0.0;
    CircleConfig cfg;
    std::vector<double> angles;
};

[[nodiscard]] ResidualReport residual_eight(const CircleConfig& cfg, const std::array<double, 4>& theta);
[[nodiscard]] ResidualReport residual_four(const CircleConfig& cfg, const std::array<double, 2>& theta);

/// The as-printed variant keeps the (a/r0)^2 coefficient for auditing; it throws DomainError at r0 = 0.
[[nodiscard]] ResidualReport residual_six(const CircleConfig& cfg, const std::array<double, 3>& theta,
                                          Variant variant = Variant::corrected);

[[nodiscard]] ResidualReport residual_general(const CircleConfig& cfg, const ChordFan& fan);

/// Dispatches on the case tag; the angle count must match the case.
[[nodiscard]] ResidualReport residual_for_case(const CircleConfig& cfg, std::span<const double> angles, CaseTag tag);

inline constexpr double default_predicate_tol = 1e-9;

struct EightSectorPredicates
{
    bool width_condition = false;  ///< (θ2−θ1)+(θ4−θ3) = π/2
    bool sine_condition = false;   ///< sin2(θ4−θ0)+sin2(θ2−θ0) = sin2(θ3−θ0)+sin2(θ1−θ0)
    /// sin(θ2+θ4−2θ0)cos(θ4−θ2) − sin(θ1+θ3−2θ0)cos(θ3−θ1); zero iff the sine condition holds.
    double product_form = 0.0;
    /// cos(θ4−θ2) − tan(θ1+θ3−2θ0)cos(θ3−θ1); nullopt ("indeterminate") when the tangent is singular.
    std::optional<double> tan_form;

    [[nodiscard]] bool both() const noexcept { return width_condition && sine_condition; }
};

struct PredicatePair
{
    bool first = false;
    bool second = false;

    [[nodiscard]] bool both() const noexcept { return first && second; }
};

[[nodiscard]] EightSectorPredicates special_case_eight(const CircleConfig& cfg, const std::array<double, 4>& theta,
                                                       double tol = default_predicate_tol);

/// first: θ2−θ1 = π/2; second: sin2(θ2−θ0) = sin2(θ1−θ0).
[[nodiscard]] PredicatePair special_case_four(const CircleConfig& cfg, const std::array<double, 2>& theta,
                                              double tol = default_predicate_tol);

/// first: sin2(θ3−θ0) = sin2(θ1−θ0); second: 2(x2−x3−x1) − sin2x3 + sin2x2 − sin2x1 = 0.
[[nodiscard]] PredicatePair special_case_six(const CircleConfig& cfg, const std::array<double, 3>& theta,
                                             double tol = default_predicate_tol);

namespace audit {

/// The sector-area closed form with the (a/r0)² coefficient on the arcsine term.
[[nodiscard]] double as_printed_sector_area(const CircleConfig& cfg, double theta_a, double theta_b);

/// 2(x2−x3−x1) − sin2x3 + sin2x2 − sin2x1, the bracket shared by both six-sector variants.
[[nodiscard]] double six_sector_bracket(const CircleConfig& cfg, const std::array<double, 3>& theta) noexcept;

}  // namespace audit

}  // namespace pizza
