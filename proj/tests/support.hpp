#pragma once
// Test-only reference integrator. It finds the rim by intersecting each ray with the circle
// directly and integrates with composite Gauss-Legendre, sharing no code with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace pizza::testing {

inline double ray_length(double a, double r0, double theta0, double theta)
{
    const double cx = r0 * std::cos(theta0);
    const double cy = r0 * std::sin(theta0);
    const double ux = std::cos(theta);
    const double uy = std::sin(theta);
    const double along = ux * cx + uy * cy;
    return along + std::sqrt(along * along - (cx * cx + cy * cy) + a * a);
}

/// ½∫ r² dθ over [lo, hi], 10-point Gauss-Legendre on `panels` equal panels.
inline double reference_area(double a, double r0, double theta0, double lo, double hi, int panels = 256)
{
    static constexpr std::array<double, 5> nodes{0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                                 0.8650633666889845, 0.9739065285171717};
    static constexpr std::array<double, 5> weights{0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                                   0.1494513491505806, 0.0666713443086881};
    const double h = (hi - lo) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * h;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            for (double sign : {-1.0, 1.0}) {
                const double r = ray_length(a, r0, theta0, mid + sign * 0.5 * h * nodes[k]);
                sum += weights[k] * 0.5 * r * r;
            }
        }
    }
    return 0.5 * h * sum;
}

inline double rel_diff(double x, double y)
{
    return std::abs(x - y) / std::max(std::abs(y), 1e-300);
}

/// Sorted angles inside one open half-turn, consecutive gaps above min_gap.
inline std::vector<double> random_fan(std::mt19937_64& rng, std::size_t n, double min_gap = 1e-4)
{
    std::uniform_real_distribution<double> start(-M_PI, M_PI);
    std::uniform_real_distribution<double> offset(0.0, M_PI * (1.0 - 1e-9));
    for (;;) {
        const double s = start(rng);
        std::vector<double> v;
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(s + offset(rng));
        std::sort(v.begin(), v.end());
        bool ok = v.back() - v.front() < M_PI;
        for (std::size_t i = 1; i < n; ++i)
            ok = ok && v[i] - v[i - 1] > min_gap;
        if (ok)
            return v;
    }
}

}  // namespace pizza::testing
