#include "pizza/verify.hpp"

#include "pizza/conditions.hpp"
#include "pizza/geometry.hpp"
#include "pizza/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pizza {

namespace {

class Uniform
{
public:
    explicit Uniform(std::uint64_t seed) : seed_(seed) {}

    double operator()(double lo, double hi) { return lo + (hi - lo) * unit_interval(splitmix64_at(seed_, k_++)); }

private:
    std::uint64_t seed_;
    std::uint64_t k_ = 0;
};

struct RandomInstance
{
    CircleConfig cfg;
    ChordFan fan;
};

RandomInstance draw_instance(Uniform& u)
{
    const double a = u(0.5, 2.0);
    const CircleConfig cfg(a, u(0.0, 0.95) * a, u(-pi, pi));
    const auto n = static_cast<std::size_t>(std::min(6.0, std::floor(u(1.0, 7.0))));
    for (;;) {
        const double start = u(-pi, pi);
        std::vector<double> angles;
        for (std::size_t i = 0; i < n; ++i)
            angles.push_back(start + u(0.0, pi));
        std::sort(angles.begin(), angles.end());
        bool separated = true;
        for (std::size_t i = 1; i < n; ++i)
            separated = separated && angles[i] - angles[i - 1] > 1e-6;
        if (separated && angles.back() - angles.front() < pi)
            return {cfg, ChordFan(std::move(angles))};
    }
}

double relative_gap(double value, double reference)
{
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

}  // namespace

std::vector<VerificationCheck> run_verification(std::uint64_t seed, int configurations)
{
    std::vector<VerificationCheck> checks;
    Uniform u(seed);

    double worst_oracle = 0.0;
    double worst_total = 0.0;
    double worst_pair = 0.0;
    for (int i = 0; i < configurations; ++i) {
        const auto [cfg, fan] = draw_instance(u);
        const SectorPartition part = build_partition(fan);
        const AreaReport closed = area_report(cfg, part);
        const AreaReport quad = quadrature_report(cfg, part, QuadratureSpec::for_circle(cfg));
        for (std::size_t k = 0; k < closed.sector_areas.size(); ++k)
            worst_oracle = std::max(worst_oracle, relative_gap(closed.sector_areas[k], quad.sector_areas[k]));
        worst_total = std::max(worst_total, relative_gap(closed.total, pi * cfg.a() * cfg.a()));
        for (std::size_t k = 0; k < fan.size(); ++k) {
            const double lo = part.lower(k);
            const double hi = part.upper(k);
            if (hi - lo >= pi)
                continue;  // single chord: the pair is the whole disk
            const double pair = sector_area_closed(cfg, lo, hi) + sector_area_closed(cfg, lo + pi, hi + pi);
            worst_pair = std::max(worst_pair, relative_gap(opposite_pair_sum(cfg, lo, hi), pair));
        }
    }
    checks.push_back({"closed form matches quadrature (rel 1e-9)", worst_oracle <= 1e-9, "worst " + sci(worst_oracle)});
    checks.push_back({"sector areas sum to pi a^2 (rel 1e-10)", worst_total <= 1e-10, "worst " + sci(worst_total)});
    checks.push_back({"opposite-pair formula equals two-sector sum (rel 1e-12)", worst_pair <= 1e-12,
                      "worst " + sci(worst_pair)});

    double worst_pizza = 0.0;
    double worst_axis = 0.0;
    for (int i = 0; i < 50; ++i) {
        const CircleConfig cfg(1.0, u(0.0, 0.95), u(-pi, pi));
        const double start = u(-pi, pi);
        worst_pizza = std::max(worst_pizza, std::abs(residual_eight(cfg, {start, start + pi / 4, start + pi / 2,
                                                                          start + 3 * pi / 4})
                                                         .residual));
        const double t0 = cfg.theta0();
        worst_axis = std::max(worst_axis, std::abs(residual_four(cfg, {t0, t0 + pi / 2}).residual));
    }
    checks.push_back({"pizza fan balances for every pole (1e-10)", worst_pizza <= 1e-10, "worst " + sci(worst_pizza)});
    checks.push_back({"axis-aligned four-sector fan balances (1e-10)", worst_axis <= 1e-10, "worst " + sci(worst_axis)});

    double worst_corrected = 0.0;
    double worst_printed = 0.0;
    for (double gamma : {0.2, 0.5, 1.0}) {
        for (double r0 : {0.2, 0.5, 0.8}) {
            const CircleConfig cfg(1.0, r0, 0.3);
            const std::array<double, 3> theta{0.3 - gamma, 0.3, 0.3 + gamma};
            const double quad = quadrature_report(cfg, build_partition(ChordFan({theta.begin(), theta.end()})),
                                                  QuadratureSpec::for_circle(cfg))
                                    .odd_sum -
                                0.5 * pi;
            const double corrected = residual_six(cfg, theta).residual;
            const double printed = residual_six(cfg, theta, Variant::as_printed).residual;
            worst_corrected = std::max({worst_corrected, std::abs(corrected), std::abs(quad)});
            worst_printed = std::max(worst_printed, std::abs((printed - quad) - r0 * r0 * std::sin(2 * gamma)));
        }
    }
    checks.push_back({"mirror six-sector fan balances, corrected form (1e-9)", worst_corrected <= 1e-9,
                      "worst " + sci(worst_corrected)});
    checks.push_back({"as-printed six-sector form off by r0^2 sin 2gamma (1e-9)", worst_printed <= 1e-9,
                      "worst " + sci(worst_printed)});

    const CircleConfig probe(1.0, 0.5, 0.0);
    const double printed_gap = std::abs(audit::as_printed_sector_area(probe, 0.0, pi / 2) -
                                        quadrature_area(probe, 0.0, pi / 2, QuadratureSpec::for_circle(probe)));
    checks.push_back({"as-printed (a/r0)^2 sector coefficient disagrees with quadrature", printed_gap > 1e-3,
                      "gap " + sci(printed_gap)});
    return checks;
}

}  // namespace pizza
