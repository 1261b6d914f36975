#include "pizza/solver.hpp"

#include "pizza/errors.hpp"
#include "pizza/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace pizza {

namespace {

using Kind = SolverError::Kind;

std::function<double(double)> residual_in(const SolveRequest& req)
{
    if (req.free_parameter == FreeParameter::angle) {
        return [&req, angles = req.angles](double value) mutable {
            angles[req.free_index] = value;
            return residual_for_case(req.cfg, angles, req.case_tag).residual;
        };
    }
    return [&req](double value) {
        const CircleConfig cfg(req.cfg.a(), value, req.cfg.theta0());
        return residual_for_case(cfg, req.angles, req.case_tag).residual;
    };
}

void check_bracket(const SolveRequest& req)
{
    if (!(req.lo < req.hi))
        throw DomainError("bracket: requires lo < hi");
    if (!(req.tol > 0.0))
        throw DomainError("tol: must be > 0");
    if (const auto n = chords_for_case(req.case_tag); n && req.angles.size() != *n)
        throw DomainError("chords: case '" + std::string(to_string(req.case_tag)) + "' needs " + std::to_string(*n) +
                          " angles");

    if (req.free_parameter == FreeParameter::angle) {
        if (req.free_index >= req.angles.size())
            throw DomainError("free-index: out of range");
        const auto [lo, hi] = free_angle_window(req.angles, req.free_index);
        if (!(req.lo > lo && req.hi < hi))
            throw SolverError(Kind::ordering_violated, "bracket: free angle would break chord ordering inside [" +
                                                           std::to_string(req.lo) + ", " + std::to_string(req.hi) +
                                                           "]; admissible window is (" + std::to_string(lo) + ", " +
                                                           std::to_string(hi) + ")");
        // Fixed angles must be consistent on their own.
        std::vector<double> probe = req.angles;
        probe[req.free_index] = 0.5 * (req.lo + req.hi);
        (void)ChordFan(probe);
    } else if (!(req.lo >= 0.0 && req.hi < req.cfg.a())) {
        throw SolverError(Kind::ordering_violated, "bracket: pole radius must stay within [0, a)");
    }
}

CircleConfig config_at(const SolveRequest& req, double root)
{
    if (req.free_parameter == FreeParameter::pole_radius)
        return CircleConfig(req.cfg.a(), root, req.cfg.theta0());
    return req.cfg;
}

std::vector<double> angles_at(const SolveRequest& req, double root)
{
    std::vector<double> angles = req.angles;
    if (req.free_parameter == FreeParameter::angle)
        angles[req.free_index] = root;
    return angles;
}

SolveOutcome finish(const SolveRequest& req, double root, double residual, int iterations)
{
    const CircleConfig cfg = config_at(req, root);
    const double oracle = quadrature_residual(cfg, ChordFan(angles_at(req, root)));
    return {root, residual, iterations, oracle, req.lo, req.hi};
}

}  // namespace

std::pair<double, double> free_angle_window(std::span<const double> angles, std::size_t free_index)
{
    const std::size_t n = angles.size();
    if (free_index >= n)
        throw DomainError("free-index: out of range");
    if (n == 1)
        return {angles[0] - pi, angles[0] + pi};
    const double lo = free_index > 0 ? angles[free_index - 1] : angles[n - 1] - pi;
    const double hi = free_index + 1 < n ? angles[free_index + 1] : angles[0] + pi;
    return {lo, hi};
}

double quadrature_residual(const CircleConfig& cfg, const ChordFan& fan)
{
    const AreaReport report = quadrature_report(cfg, build_partition(fan), QuadratureSpec::for_circle(cfg));
    return report.odd_sum - 0.5 * pi * cfg.a() * cfg.a();
}

SolveOutcome solve_bracketed(const SolveRequest& req)
{
    check_bracket(req);
    const auto f = residual_in(req);
    const double target = req.tol * req.cfg.a() * req.cfg.a();

    double lo = req.lo;
    double hi = req.hi;
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (std::abs(f_lo) <= target)
        return finish(req, lo, f_lo, 0);
    if (std::abs(f_hi) <= target)
        return finish(req, hi, f_hi, 0);
    if ((f_lo < 0.0) == (f_hi < 0.0))
        throw SolverError(Kind::no_sign_change, "bracket: residual has the same sign at both ends (" +
                                                    std::to_string(f_lo) + ", " + std::to_string(f_hi) + ")");

    bool bisect_next = false;
    double previous_width = hi - lo;
    for (int iteration = 1; iteration <= req.max_iterations; ++iteration) {
        const double mid = 0.5 * (lo + hi);
        double x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        if (bisect_next || !(x > lo && x < hi))
            x = mid;

        const double fx = f(x);
        if (std::abs(fx) <= target)
            return finish(req, x, fx, iteration);

        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }

        const double width = hi - lo;
        const double ulp_floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(lo), std::abs(hi), 1.0});
        if (width <= std::max(req.tol, ulp_floor)) {
            const bool lo_better = std::abs(f_lo) <= std::abs(f_hi);
            const double best = lo_better ? lo : hi;
            const double f_best = lo_better ? f_lo : f_hi;
            if (std::abs(f_best) <= target)
                return finish(req, best, f_best, iteration);
            throw SolverError(Kind::tolerance_unmet, "solver: bracket collapsed with residual " +
                                                         std::to_string(f_best) + " above tolerance");
        }
        // A secant step that fails to halve the bracket is followed by a bisection.
        bisect_next = width > 0.5 * previous_width;
        previous_width = width;
    }
    throw SolverError(Kind::max_iterations, "solver: exceeded " + std::to_string(req.max_iterations) + " iterations");
}

SolveOutcome solve_free_angle(const SolveRequest& req)
{
    if (req.free_parameter != FreeParameter::angle)
        throw DomainError("solve_free_angle: free parameter must be an angle");
    return solve_bracketed(req);
}

SolveOutcome solve_pole_radius(std::span<const double> angles, double theta0, double a, CaseTag tag)
{
    if (tag != CaseTag::four && tag != CaseTag::eight)
        throw DomainError("case: pole-radius inversion is available for 'four' and 'eight' only");
    const std::size_t expected = *chords_for_case(tag);
    if (angles.size() != expected)
        throw DomainError("chords: case '" + std::string(to_string(tag)) + "' needs " + std::to_string(expected) +
                          " angles");
    const ChordFan fan(std::vector<double>(angles.begin(), angles.end()));
    (void)CircleConfig(a, 0.0, theta0);

    // Residual is (r0²/2)K + a²L with K the signed sine sum and L the angular deficit.
    double sines = 0.0;
    double widths = 0.0;
    for (std::size_t i = 0; i + 1 < angles.size(); i += 2) {
        sines += std::sin(2.0 * (angles[i + 1] - theta0)) - std::sin(2.0 * (angles[i] - theta0));
        widths += angles[i + 1] - angles[i];
    }
    const double deficit = widths - 0.5 * pi;
    if (std::abs(sines) <= 1e-12)
        throw SolverError(Kind::degenerate, "solver: sine sum K vanishes; balance does not depend on r0");

    const double ratio = -2.0 * deficit / sines;
    if (!(ratio >= 0.0 && ratio < 1.0))
        throw SolverError(Kind::no_interior_solution,
                          "solver: no interior solution ((r0/a)^2 = " + std::to_string(ratio) + " outside [0, 1))");

    const double root = a * std::sqrt(ratio);
    const CircleConfig cfg(a, root, theta0);
    const double residual = residual_for_case(cfg, angles, tag).residual;
    return {root, residual, 0, quadrature_residual(cfg, fan), root, root};
}

std::optional<std::pair<double, double>> scan_free_angle_bracket(const CircleConfig& cfg,
                                                                 std::span<const double> angles, CaseTag tag,
                                                                 std::size_t free_index, int points)
{
    if (points < 2)
        throw DomainError("scan: needs at least two points");
    const auto [window_lo, window_hi] = free_angle_window(angles, free_index);
    std::vector<double> probe(angles.begin(), angles.end());
    auto residual = [&](double value) {
        probe[free_index] = value;
        return residual_for_case(cfg, probe, tag).residual;
    };

    // Sample strictly inside the open window.
    const double step = (window_hi - window_lo) / points;
    double previous_x = window_lo + 0.5 * step;
    double previous_f = residual(previous_x);
    for (int i = 1; i < points; ++i) {
        const double x = window_lo + (i + 0.5) * step;
        const double fx = residual(x);
        if ((fx < 0.0) != (previous_f < 0.0) || fx == 0.0)
            return std::pair{previous_x, x};
        previous_x = x;
        previous_f = fx;
    }
    return std::nullopt;
}

double GridAxis::at(std::size_t i) const noexcept
{
    if (count <= 1)
        return lo;
    if (i + 1 == count)
        return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

ResidualGrid sweep_grid(const SweepTemplate& base, std::span<const GridAxis> axes, CaseTag tag)
{
    if (axes.empty())
        throw DomainError("grid: at least one axis is required");
    if (const auto n = chords_for_case(tag); n && base.angles.size() != *n)
        throw DomainError("chords: case '" + std::string(to_string(tag)) + "' needs " + std::to_string(*n) +
                          " angles");

    enum class Target { a, r0, theta0, angle };
    struct Binding { Target target; std::size_t index; };
    std::vector<Binding> bindings;
    std::size_t total = 1;
    for (const GridAxis& axis : axes) {
        if (axis.count == 0)
            throw DomainError("grid: axis '" + axis.name + "' has zero points");
        total *= axis.count;
        if (axis.name == "a")
            bindings.push_back({Target::a, 0});
        else if (axis.name == "r0")
            bindings.push_back({Target::r0, 0});
        else if (axis.name == "theta0")
            bindings.push_back({Target::theta0, 0});
        else if (axis.name.starts_with("theta") && axis.name.size() > 5) {
            std::size_t k = 0;
            try {
                k = std::stoul(axis.name.substr(5));
            } catch (const std::exception&) {
                k = 0;
            }
            if (k < 1 || k > base.angles.size())
                throw DomainError("grid: axis '" + axis.name + "' does not name a chord angle");
            bindings.push_back({Target::angle, k - 1});
        } else {
            throw DomainError("grid: unknown axis '" + axis.name + "'");
        }
    }

    ResidualGrid grid{std::vector<GridAxis>(axes.begin(), axes.end()), std::vector<double>(total)};
    for (std::size_t flat = 0; flat < total; ++flat) {
        SweepTemplate point = base;
        std::size_t rest = flat;
        for (std::size_t d = axes.size(); d-- > 0;) {
            const double value = axes[d].at(rest % axes[d].count);
            rest /= axes[d].count;
            switch (bindings[d].target) {
            case Target::a: point.a = value; break;
            case Target::r0: point.r0 = value; break;
            case Target::theta0: point.theta0 = value; break;
            case Target::angle: point.angles[bindings[d].index] = value; break;
            }
        }
        try {
            const CircleConfig cfg(point.a, point.r0, point.theta0);
            grid.values[flat] = residual_for_case(cfg, point.angles, tag).residual;
        } catch (const DomainError&) {
            grid.values[flat] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return grid;
}

}  // namespace pizza
