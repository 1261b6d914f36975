#include "pizza/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pizza {

namespace {

constexpr double viewport = 800.0;
constexpr double circle_radius_px = 0.45 * viewport;  // diameter is 90% of the view
constexpr int arcs_per_sector = 4;

constexpr const char* odd_fill = "#e9c46a";
constexpr const char* even_fill = "#2a9d8f";
constexpr const char* stroke = "#264653";

std::string fixed(double v)
{
    if (std::abs(v) < 5e-7)
        v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Point
{
    double x, y;
};

class Canvas
{
public:
    explicit Canvas(const CircleConfig& cfg) : cfg_(cfg), scale_(circle_radius_px / cfg.a()) {}

    /// Viewport position of a point given in the pole frame (y up).
    [[nodiscard]] Point map(double x, double y) const
    {
        const double cx = cfg_.r0() * std::cos(cfg_.theta0());
        const double cy = cfg_.r0() * std::sin(cfg_.theta0());
        return {0.5 * viewport + (x - cx) * scale_, 0.5 * viewport - (y - cy) * scale_};
    }

    [[nodiscard]] Point pole() const { return map(0.0, 0.0); }
    [[nodiscard]] Point center() const { return {0.5 * viewport, 0.5 * viewport}; }

    [[nodiscard]] Point on_circle(double theta) const
    {
        const double r = radial_distance(cfg_, theta);
        return map(r * std::cos(theta), r * std::sin(theta));
    }

private:
    const CircleConfig& cfg_;
    double scale_;
};

std::string xy(Point p)
{
    return fixed(p.x) + " " + fixed(p.y);
}

}  // namespace

std::string render_svg(const CircleConfig& cfg, const SectorPartition& part, const AreaReport& report)
{
    const Canvas canvas(cfg);
    const std::string radius = fixed(circle_radius_px);
    std::ostringstream os;

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
          "viewBox=\"0 0 800 800\">\n"
       << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

    // Each sector is a fan from the pole closed by circle arcs. Splitting the rim into four
    // pieces keeps every arc under a half-turn, so the large-arc flag is always 0.
    os << "  <g id=\"sectors\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < part.sector_count(); ++i) {
        const double lo = part.lower(i);
        const double hi = part.upper(i);
        os << "    <path id=\"sector-" << i + 1 << "\" fill=\"" << (i % 2 == 0 ? odd_fill : even_fill)
           << "\" d=\"M " << xy(canvas.pole()) << " L " << xy(canvas.on_circle(lo));
        for (int k = 1; k <= arcs_per_sector; ++k) {
            const double theta = lo + (hi - lo) * k / arcs_per_sector;
            os << " A " << radius << " " << radius << " 0 0 0 " << xy(canvas.on_circle(theta));
        }
        os << " Z\"/>\n";
    }
    os << "  </g>\n";

    const Point c = canvas.center();
    os << "  <circle id=\"outline\" cx=\"" << fixed(c.x) << "\" cy=\"" << fixed(c.y) << "\" r=\"" << radius
       << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";

    os << "  <g id=\"chords\" stroke=\"" << stroke << "\" stroke-width=\"1.5\">\n";
    for (std::size_t i = 0; i < part.chord_count(); ++i) {
        const Point p = canvas.on_circle(part.lower(i));
        const Point q = canvas.on_circle(part.lower(i) + pi);
        os << "    <line x1=\"" << fixed(p.x) << "\" y1=\"" << fixed(p.y) << "\" x2=\"" << fixed(q.x) << "\" y2=\""
           << fixed(q.y) << "\"/>\n";
    }
    os << "  </g>\n";

    const Point o = canvas.pole();
    os << "  <circle id=\"pole\" cx=\"" << fixed(o.x) << "\" cy=\"" << fixed(o.y)
       << "\" r=\"5.000000\" fill=\"#000000\"/>\n";
    os << "  <path id=\"center\" stroke=\"#e76f51\" stroke-width=\"2\" d=\"M " << fixed(c.x - 6.0) << " "
       << fixed(c.y) << " L " << fixed(c.x + 6.0) << " " << fixed(c.y) << " M " << fixed(c.x) << " "
       << fixed(c.y - 6.0) << " L " << fixed(c.x) << " " << fixed(c.y + 6.0) << "\"/>\n";

    os << "  <g id=\"legend\" font-family=\"monospace\" font-size=\"14\" fill=\"#000000\">\n"
       << "    <rect x=\"8\" y=\"8\" width=\"14\" height=\"14\" fill=\"" << odd_fill << "\"/>\n"
       << "    <text x=\"28\" y=\"20\">odd sum = " << fixed(report.odd_sum) << "</text>\n"
       << "    <rect x=\"8\" y=\"28\" width=\"14\" height=\"14\" fill=\"" << even_fill << "\"/>\n"
       << "    <text x=\"28\" y=\"40\">even sum = " << fixed(report.even_sum) << "</text>\n"
       << "    <text x=\"8\" y=\"60\">a = " << fixed(cfg.a()) << ", r0 = " << fixed(cfg.r0())
       << ", theta0 = " << fixed(reduce_angle(cfg.theta0())) << "</text>\n"
       << "  </g>\n"
       << "</svg>\n";
    return os.str();
}

}  // namespace pizza
