#include "pizza/oracle.hpp"

#include "pizza/errors.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace pizza {

namespace {

struct SimpsonPanel
{
    double lo, mid, hi;
    double f_lo, f_mid, f_hi;
    double estimate;
};

class SectorIntegrand
{
public:
    explicit SectorIntegrand(const CircleConfig& cfg) : cfg_(cfg) {}

    double operator()(double theta) const
    {
        const double r = radial_distance(cfg_, theta);
        return 0.5 * r * r;
    }

private:
    const CircleConfig& cfg_;
};

double simpson(double lo, double hi, double f_lo, double f_mid, double f_hi)
{
    return (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
}

double refine(const SectorIntegrand& f, const SimpsonPanel& p, double tol, int depth_left)
{
    const double left_mid = 0.5 * (p.lo + p.mid);
    const double right_mid = 0.5 * (p.mid + p.hi);
    const double f_lm = f(left_mid);
    const double f_rm = f(right_mid);
    const double left = simpson(p.lo, p.mid, p.f_lo, f_lm, p.f_mid);
    const double right = simpson(p.mid, p.hi, p.f_mid, f_rm, p.f_hi);
    const double delta = left + right - p.estimate;

    // Richardson: the two-panel error is about delta / 15.
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth_left <= 0)
        throw QuadratureError("quadrature: max_depth reached before tolerance was met");

    const SimpsonPanel lp{p.lo, left_mid, p.mid, p.f_lo, f_lm, p.f_mid, left};
    const SimpsonPanel rp{p.mid, right_mid, p.hi, p.f_mid, f_rm, p.f_hi, right};
    return refine(f, lp, 0.5 * tol, depth_left - 1) + refine(f, rp, 0.5 * tol, depth_left - 1);
}

}  // namespace

QuadratureSpec QuadratureSpec::for_circle(const CircleConfig& cfg)
{
    return QuadratureSpec{1e-12 * cfg.a() * cfg.a(), 40};
}

double quadrature_area(const CircleConfig& cfg, double theta_a, double theta_b, const QuadratureSpec& spec)
{
    if (!(spec.abs_tol > 0.0) || spec.max_depth < 1)
        throw DomainError("quadrature: abs_tol must be > 0 and max_depth >= 1");
    const double width = theta_b - theta_a;
    if (!(width > 0.0) || width > two_pi)
        throw DomainError("sector: bounds must satisfy theta_a < theta_b <= theta_a + 2pi");

    const SectorIntegrand f(cfg);
    const double mid = 0.5 * (theta_a + theta_b);
    const double f_lo = f(theta_a);
    const double f_mid = f(mid);
    const double f_hi = f(theta_b);
    const SimpsonPanel whole{theta_a, mid, theta_b, f_lo, f_mid, f_hi, simpson(theta_a, theta_b, f_lo, f_mid, f_hi)};
    return refine(f, whole, spec.abs_tol, spec.max_depth);
}

AreaReport quadrature_report(const CircleConfig& cfg, const SectorPartition& part, const QuadratureSpec& spec)
{
    std::vector<double> areas;
    areas.reserve(part.sector_count());
    for (std::size_t i = 0; i < part.sector_count(); ++i)
        areas.push_back(quadrature_area(cfg, part.lower(i), part.upper(i), spec));
    return make_area_report(std::move(areas));
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) noexcept
{
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_interval(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<SectorEstimate> montecarlo_sectors(const CircleConfig& cfg, std::span<const double> boundaries,
                                               const MonteCarloSpec& spec)
{
    if (spec.samples < 1)
        throw DomainError("samples: must be >= 1");
    if (boundaries.empty())
        throw DomainError("boundaries: at least one boundary is required");
    for (std::size_t i = 1; i < boundaries.size(); ++i)
        if (!(boundaries[i] > boundaries[i - 1]))
            throw DomainError("boundaries: must be strictly increasing");
    if (!(boundaries.back() - boundaries.front() < two_pi))
        throw DomainError("boundaries: must span less than a full turn");

    const double origin = boundaries.front();
    std::vector<double> offsets;
    offsets.reserve(boundaries.size());
    for (double b : boundaries)
        offsets.push_back(b - origin);

    const double cx = cfg.r0() * std::cos(cfg.theta0());
    const double cy = cfg.r0() * std::sin(cfg.theta0());
    const double a = cfg.a();
    const std::size_t sectors = boundaries.size();

    auto count_range = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& hits) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const double u = unit_interval(splitmix64_at(spec.seed, 2 * i));
            const double v = unit_interval(splitmix64_at(spec.seed, 2 * i + 1));
            const double rho = a * std::sqrt(u);
            const double psi = two_pi * v;
            const double x = cx + rho * std::cos(psi);
            const double y = cy + rho * std::sin(psi);
            double t = std::fmod(std::atan2(y, x) - origin, two_pi);
            if (t < 0.0)
                t += two_pi;
            if (t >= two_pi)
                t = 0.0;
            const auto it = std::upper_bound(offsets.begin(), offsets.end(), t);
            ++hits[static_cast<std::size_t>(it - offsets.begin()) - 1];
        }
    };

    unsigned shards = spec.shards != 0 ? spec.shards : std::max(1u, std::thread::hardware_concurrency());
    shards = static_cast<unsigned>(std::min<std::uint64_t>(shards, spec.samples));
    std::vector<std::vector<std::uint64_t>> shard_hits(shards, std::vector<std::uint64_t>(sectors, 0));
    {
        std::vector<std::jthread> workers;
        workers.reserve(shards);
        for (unsigned s = 0; s < shards; ++s) {
            const std::uint64_t begin = spec.samples * s / shards;
            const std::uint64_t end = spec.samples * (s + 1) / shards;
            workers.emplace_back([&, s, begin, end] { count_range(begin, end, shard_hits[s]); });
        }
    }

    const double disk = pi * a * a;
    const auto n = static_cast<double>(spec.samples);
    std::vector<SectorEstimate> estimates(sectors);
    for (std::size_t k = 0; k < sectors; ++k) {
        std::uint64_t hits = 0;
        for (const auto& h : shard_hits)
            hits += h[k];
        const double p = static_cast<double>(hits) / n;
        estimates[k] = {disk * p, disk * std::sqrt(p * (1.0 - p) / n)};
    }
    return estimates;
}

std::vector<SectorEstimate> montecarlo_area(const CircleConfig& cfg, const SectorPartition& part,
                                            const MonteCarloSpec& spec)
{
    return montecarlo_sectors(cfg, part.boundaries(), spec);
}

}  // namespace pizza
