#include "pizza/geometry.hpp"

#include "pizza/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pizza {

CircleConfig::CircleConfig(double a, double r0, double theta0) : a_(a), r0_(r0), theta0_(theta0)
{
    if (!(std::isfinite(a) && a > 0.0))
        throw DomainError("a: radius must be finite and > 0, got " + std::to_string(a));
    if (!(std::isfinite(r0) && r0 >= 0.0 && r0 < a))
        throw DomainError("r0: pole must lie strictly inside the circle (0 <= r0 < a), got r0=" +
                          std::to_string(r0) + " a=" + std::to_string(a));
    if (!std::isfinite(theta0))
        throw DomainError("theta0: must be finite");
}

ChordFan::ChordFan(std::vector<double> base_angles) : angles_(std::move(base_angles))
{
    if (angles_.empty())
        throw DomainError("chords: at least one chord angle is required");
    for (double phi : angles_)
        if (!std::isfinite(phi))
            throw DomainError("chords: angles must be finite");
    for (std::size_t i = 1; i < angles_.size(); ++i)
        if (!(angles_[i] > angles_[i - 1]))
            throw DomainError("chords: angles must be strictly increasing (index " + std::to_string(i + 1) + ")");
    if (!(angles_.back() - angles_.front() < pi))
        throw DomainError("chords: angles must lie within an open half-turn (last - first < pi)");
}

double SectorPartition::upper(std::size_t i) const
{
    return i + 1 < boundaries_.size() ? boundaries_[i + 1] : boundaries_.front() + two_pi;
}

double radial_distance(const CircleConfig& cfg, double theta) noexcept
{
    const double s = std::sin(theta - cfg.theta0());
    const double c = std::cos(theta - cfg.theta0());
    const double r0 = cfg.r0();
    const double a = cfg.a();
    return r0 * c + std::sqrt(a * a - r0 * r0 * s * s);
}

double substituted_angle(const CircleConfig& cfg, double theta) noexcept
{
    return std::asin(cfg.r0() / cfg.a() * std::sin(theta - cfg.theta0()));
}

double sector_area_closed(const CircleConfig& cfg, double theta_a, double theta_b)
{
    const double width = theta_b - theta_a;
    // ta + 2pi - ta can round a few ulps past 2pi.
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(theta_a), std::abs(theta_b), two_pi});
    if (!(width > 0.0) || width > two_pi + slack)
        throw DomainError("sector: bounds must satisfy theta_a < theta_b <= theta_a + 2pi");

    const double a2 = cfg.a() * cfg.a();
    const double r02 = cfg.r0() * cfg.r0();
    const double xa = substituted_angle(cfg, theta_a);
    const double xb = substituted_angle(cfg, theta_b);

    // The differences sin 2B - sin 2A are taken in product form to keep narrow sectors accurate.
    const double constant_term = 0.5 * a2 * width;
    const double harmonic_term = 0.5 * r02 * std::sin(width) * std::cos(theta_a + theta_b - 2.0 * cfg.theta0());
    const double radical_term = 0.5 * a2 * ((xb - xa) + std::cos(xa + xb) * std::sin(xb - xa));
    return constant_term + harmonic_term + radical_term;
}

SectorPartition build_partition(const ChordFan& fan)
{
    std::vector<double> boundaries(fan.angles().begin(), fan.angles().end());
    boundaries.reserve(2 * fan.size());
    for (double phi : fan.angles())
        boundaries.push_back(phi + pi);
    return SectorPartition(std::move(boundaries));
}

AreaReport make_area_report(std::vector<double> sector_areas)
{
    AreaReport report;
    for (std::size_t i = 0; i < sector_areas.size(); ++i)
        (i % 2 == 0 ? report.odd_sum : report.even_sum) += sector_areas[i];
    report.total = report.odd_sum + report.even_sum;
    report.sector_areas = std::move(sector_areas);
    return report;
}

AreaReport area_report(const CircleConfig& cfg, const SectorPartition& part)
{
    std::vector<double> areas;
    areas.reserve(part.sector_count());
    for (std::size_t i = 0; i < part.sector_count(); ++i)
        areas.push_back(sector_area_closed(cfg, part.lower(i), part.upper(i)));
    return make_area_report(std::move(areas));
}

double opposite_pair_sum(const CircleConfig& cfg, double theta_a, double theta_b)
{
    const double width = theta_b - theta_a;
    if (!(width > 0.0 && width < pi))
        throw DomainError("opposite pair: bounds must satisfy theta_a < theta_b < theta_a + pi");
    const double a2 = cfg.a() * cfg.a();
    const double r02 = cfg.r0() * cfg.r0();
    return a2 * width + r02 * std::sin(width) * std::cos(theta_a + theta_b - 2.0 * cfg.theta0());
}

double reduce_angle(double theta) noexcept
{
    double t = std::fmod(theta, two_pi);
    if (t < 0.0)
        t += two_pi;
    return t >= two_pi ? 0.0 : t;
}

}  // namespace pizza
