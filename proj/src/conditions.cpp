#include "pizza/conditions.hpp"

#include "pizza/errors.hpp"

#include <cmath>
#include <string>

namespace pizza {

namespace {

template <std::size_t N>
std::vector<double> checked_angles(const std::array<double, N>& theta)
{
    // ChordFan enforces θ1 < ... < θN < θ1 + π.
    const ChordFan fan(std::vector<double>(theta.begin(), theta.end()));
    return std::vector<double>(fan.angles().begin(), fan.angles().end());
}

double sin2(double angle)
{
    return std::sin(2.0 * angle);
}

}  // namespace

std::string_view to_string(CaseTag tag) noexcept
{
    switch (tag) {
    case CaseTag::four: return "four";
    case CaseTag::six: return "six";
    case CaseTag::eight: return "eight";
    case CaseTag::general: return "general";
    }
    return "general";
}

std::string_view to_string(Variant variant) noexcept
{
    return variant == Variant::corrected ? "corrected" : "as-printed";
}

std::optional<CaseTag> parse_case_tag(std::string_view text) noexcept
{
    if (text == "four")
        return CaseTag::four;
    if (text == "six")
        return CaseTag::six;
    if (text == "eight")
        return CaseTag::eight;
    if (text == "general")
        return CaseTag::general;
    return std::nullopt;
}

std::optional<std::size_t> chords_for_case(CaseTag tag) noexcept
{
    switch (tag) {
    case CaseTag::four: return 2;
    case CaseTag::six: return 3;
    case CaseTag::eight: return 4;
    case CaseTag::general: return std::nullopt;
    }
    return std::nullopt;
}

ResidualReport residual_eight(const CircleConfig& cfg, const std::array<double, 4>& theta)
{
    auto angles = checked_angles(theta);
    const double t0 = cfg.theta0();
    const double sines = sin2(theta[1] - t0) - sin2(theta[0] - t0) + sin2(theta[3] - t0) - sin2(theta[2] - t0);
    const double widths = (theta[1] - theta[0]) + (theta[3] - theta[2]);
    const double a2 = cfg.a() * cfg.a();
    const double value = 0.5 * cfg.r0() * cfg.r0() * sines + a2 * (widths - 0.5 * pi);
    return {CaseTag::eight, Variant::corrected, value, cfg, std::move(angles)};
}

ResidualReport residual_four(const CircleConfig& cfg, const std::array<double, 2>& theta)
{
    auto angles = checked_angles(theta);
    const double t0 = cfg.theta0();
    const double sines = sin2(theta[1] - t0) - sin2(theta[0] - t0);
    const double a2 = cfg.a() * cfg.a();
    const double value = 0.5 * cfg.r0() * cfg.r0() * sines + a2 * ((theta[1] - theta[0]) - 0.5 * pi);
    return {CaseTag::four, Variant::corrected, value, cfg, std::move(angles)};
}

ResidualReport residual_six(const CircleConfig& cfg, const std::array<double, 3>& theta, Variant variant)
{
    auto angles = checked_angles(theta);
    const double bracket = audit::six_sector_bracket(cfg, theta);
    const double a2 = cfg.a() * cfg.a();

    double value = 0.0;
    if (variant == Variant::corrected) {
        value = 0.5 * a2 * bracket;
    } else {
        if (cfg.r0() == 0.0)
            throw DomainError("as-printed six-sector residual is undefined at r0 = 0");
        const double t0 = cfg.theta0();
        const double r02 = cfg.r0() * cfg.r0();
        value = 0.5 * r02 * (sin2(theta[2] - t0) - sin2(theta[0] - t0)) + a2 / r02 * bracket;
    }
    return {CaseTag::six, variant, value, cfg, std::move(angles)};
}

ResidualReport residual_general(const CircleConfig& cfg, const ChordFan& fan)
{
    const AreaReport report = area_report(cfg, build_partition(fan));
    const double value = report.odd_sum - 0.5 * pi * cfg.a() * cfg.a();
    return {CaseTag::general, Variant::corrected, value, cfg,
            std::vector<double>(fan.angles().begin(), fan.angles().end())};
}

ResidualReport residual_for_case(const CircleConfig& cfg, std::span<const double> angles, CaseTag tag)
{
    const auto expected = chords_for_case(tag);
    if (expected && angles.size() != *expected)
        throw DomainError("chords: case '" + std::string(to_string(tag)) + "' needs " + std::to_string(*expected) +
                          " chord angles, got " + std::to_string(angles.size()));
    switch (tag) {
    case CaseTag::four: return residual_four(cfg, {angles[0], angles[1]});
    case CaseTag::six: return residual_six(cfg, {angles[0], angles[1], angles[2]});
    case CaseTag::eight: return residual_eight(cfg, {angles[0], angles[1], angles[2], angles[3]});
    case CaseTag::general: break;
    }
    return residual_general(cfg, ChordFan(std::vector<double>(angles.begin(), angles.end())));
}

EightSectorPredicates special_case_eight(const CircleConfig& cfg, const std::array<double, 4>& theta, double tol)
{
    const double t0 = cfg.theta0();
    EightSectorPredicates out;
    const double widths = (theta[1] - theta[0]) + (theta[3] - theta[2]);
    out.width_condition = std::abs(widths - 0.5 * pi) <= tol;

    const double lhs = sin2(theta[3] - t0) + sin2(theta[1] - t0);
    const double rhs = sin2(theta[2] - t0) + sin2(theta[0] - t0);
    out.sine_condition = std::abs(lhs - rhs) <= tol;

    out.product_form = std::sin(theta[1] + theta[3] - 2.0 * t0) * std::cos(theta[3] - theta[1]) -
                       std::sin(theta[0] + theta[2] - 2.0 * t0) * std::cos(theta[2] - theta[0]);

    const double u = theta[0] + theta[2] - 2.0 * t0;
    if (std::abs(std::remainder(u - 0.5 * pi, pi)) > tol)
        out.tan_form = std::cos(theta[3] - theta[1]) - std::tan(u) * std::cos(theta[2] - theta[0]);
    return out;
}

PredicatePair special_case_four(const CircleConfig& cfg, const std::array<double, 2>& theta, double tol)
{
    const double t0 = cfg.theta0();
    return {std::abs((theta[1] - theta[0]) - 0.5 * pi) <= tol,
            std::abs(sin2(theta[1] - t0) - sin2(theta[0] - t0)) <= tol};
}

PredicatePair special_case_six(const CircleConfig& cfg, const std::array<double, 3>& theta, double tol)
{
    const double t0 = cfg.theta0();
    return {std::abs(sin2(theta[2] - t0) - sin2(theta[0] - t0)) <= tol,
            std::abs(audit::six_sector_bracket(cfg, theta)) <= tol};
}

namespace audit {

double as_printed_sector_area(const CircleConfig& cfg, double theta_a, double theta_b)
{
    const double width = theta_b - theta_a;
    if (!(width > 0.0) || width > two_pi)
        throw DomainError("sector: bounds must satisfy theta_a < theta_b <= theta_a + 2pi");
    if (cfg.r0() == 0.0)
        throw DomainError("as-printed sector area is undefined at r0 = 0");
    const double a2 = cfg.a() * cfg.a();
    const double r02 = cfg.r0() * cfg.r0();
    const double xa = substituted_angle(cfg, theta_a);
    const double xb = substituted_angle(cfg, theta_b);
    return 0.5 * r02 * (width + std::sin(width) * std::cos(theta_a + theta_b - 2.0 * cfg.theta0())) +
           0.5 * (a2 - r02) * width + a2 / r02 * ((xb - xa) + std::cos(xa + xb) * std::sin(xb - xa));
}

double six_sector_bracket(const CircleConfig& cfg, const std::array<double, 3>& theta) noexcept
{
    const double x1 = substituted_angle(cfg, theta[0]);
    const double x2 = substituted_angle(cfg, theta[1]);
    const double x3 = substituted_angle(cfg, theta[2]);
    return 2.0 * (x2 - x3 - x1) - sin2(x3) + sin2(x2) - sin2(x1);
}

}  // namespace audit

}  // namespace pizza
