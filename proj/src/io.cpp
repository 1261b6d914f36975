#include "pizza/io.hpp"

#include "pizza/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace pizza {

namespace {

const ordered_json& require(const ordered_json& doc, const char* key)
{
    const auto it = doc.find(key);
    if (it == doc.end())
        throw ConfigError(std::string(key) + ": missing required field");
    return *it;
}

double number_field(const ordered_json& doc, const char* key)
{
    const ordered_json& v = require(doc, key);
    if (!v.is_number())
        throw ConfigError(std::string(key) + ": expected a number");
    return v.get<double>();
}

std::vector<double> number_array(const ordered_json& value, const char* key)
{
    if (!value.is_array())
        throw ConfigError(std::string(key) + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_number())
            throw ConfigError(std::string(key) + ": expected an array of numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

std::uint64_t unsigned_field(const ordered_json& value, const char* key)
{
    if (!value.is_number_unsigned())
        throw ConfigError(std::string(key) + ": expected a non-negative integer");
    return value.get<std::uint64_t>();
}

ordered_json parse_document(std::string_view text)
{
    try {
        return ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string_view to_string(Mode mode) noexcept
{
    switch (mode) {
    case Mode::closed: return "closed";
    case Mode::quadrature: return "quadrature";
    case Mode::montecarlo: return "montecarlo";
    }
    return "closed";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept
{
    if (text == "closed")
        return Mode::closed;
    if (text == "quadrature")
        return Mode::quadrature;
    if (text == "montecarlo")
        return Mode::montecarlo;
    return std::nullopt;
}

std::string_view to_string(OutputFormat format) noexcept
{
    return format == OutputFormat::json ? "json" : "csv";
}

std::optional<OutputFormat> parse_format(std::string_view text) noexcept
{
    if (text == "json")
        return OutputFormat::json;
    if (text == "csv")
        return OutputFormat::csv;
    return std::nullopt;
}

std::string format_number(double value)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc())
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buf.data(), end);
}

RunConfig read_config(std::string_view text)
{
    const ordered_json doc = parse_document(text);
    if (!doc.is_object())
        throw ConfigError("config: document must be a JSON object");

    static const std::set<std::string> known{"a", "r0", "theta0", "chords", "mode", "tol",
                                             "seed", "samples", "format", "out"};
    for (const auto& [key, _] : doc.items())
        if (!known.contains(key))
            throw ConfigError(key + ": unknown field");

    RunConfig cfg;
    cfg.a = number_field(doc, "a");
    cfg.r0 = number_field(doc, "r0");
    cfg.theta0 = number_field(doc, "theta0");
    cfg.chords = number_array(require(doc, "chords"), "chords");

    if (const auto it = doc.find("mode"); it != doc.end()) {
        const auto mode = it->is_string() ? parse_mode(it->get<std::string>()) : std::nullopt;
        if (!mode)
            throw ConfigError("mode: expected one of closed, quadrature, montecarlo");
        cfg.mode = *mode;
    }
    if (const auto it = doc.find("tol"); it != doc.end()) {
        if (!it->is_number())
            throw ConfigError("tol: expected a number");
        cfg.tol = it->get<double>();
    }
    if (const auto it = doc.find("seed"); it != doc.end())
        cfg.seed = unsigned_field(*it, "seed");
    if (const auto it = doc.find("samples"); it != doc.end())
        cfg.samples = unsigned_field(*it, "samples");
    if (const auto it = doc.find("format"); it != doc.end()) {
        const auto format = it->is_string() ? parse_format(it->get<std::string>()) : std::nullopt;
        if (!format)
            throw ConfigError("format: expected json or csv");
        cfg.format = *format;
    }
    if (const auto it = doc.find("out"); it != doc.end()) {
        if (!it->is_string())
            throw ConfigError("out: expected a path string");
        cfg.out = it->get<std::string>();
    }

    // Constraint checks; DomainError messages name the field.
    (void)cfg.circle();
    (void)cfg.fan();
    if (cfg.tol && !(*cfg.tol > 0.0))
        throw DomainError("tol: must be > 0");
    if (cfg.samples && *cfg.samples < 1)
        throw DomainError("samples: must be >= 1");
    return cfg;
}

std::string write_config(const RunConfig& cfg)
{
    ordered_json doc;
    doc["a"] = cfg.a;
    doc["r0"] = cfg.r0;
    doc["theta0"] = cfg.theta0;
    doc["chords"] = cfg.chords;
    doc["mode"] = to_string(cfg.mode);
    if (cfg.tol)
        doc["tol"] = *cfg.tol;
    if (cfg.seed)
        doc["seed"] = *cfg.seed;
    if (cfg.samples)
        doc["samples"] = *cfg.samples;
    doc["format"] = to_string(cfg.format);
    if (cfg.out)
        doc["out"] = *cfg.out;
    return doc.dump(2) + "\n";
}

AreaDocument make_area_document(const RunConfig& cfg)
{
    const CircleConfig circle = cfg.circle();
    const SectorPartition part = build_partition(cfg.fan());
    AreaDocument doc{circle, cfg.chords, cfg.mode, {}, {}};

    switch (cfg.mode) {
    case Mode::closed:
        doc.report = area_report(circle, part);
        break;
    case Mode::quadrature: {
        QuadratureSpec spec = QuadratureSpec::for_circle(circle);
        if (cfg.tol)
            spec.abs_tol = *cfg.tol;
        doc.report = quadrature_report(circle, part, spec);
        break;
    }
    case Mode::montecarlo: {
        MonteCarloSpec spec;
        spec.samples = cfg.samples.value_or(spec.samples);
        spec.seed = cfg.seed.value_or(spec.seed);
        const auto estimates = montecarlo_area(circle, part, spec);
        std::vector<double> areas;
        for (const auto& e : estimates) {
            areas.push_back(e.area);
            doc.std_errors.push_back(e.std_error);
        }
        doc.report = make_area_report(std::move(areas));
        break;
    }
    }
    return doc;
}

std::string write_report(const AreaDocument& doc, OutputFormat format)
{
    const SectorPartition part = build_partition(ChordFan(doc.chords));
    const auto& areas = doc.report.sector_areas;

    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "index,theta_lo,theta_hi,area,parity\n";
        for (std::size_t i = 0; i < areas.size(); ++i)
            os << i + 1 << ',' << format_number(part.lower(i)) << ',' << format_number(part.upper(i)) << ','
               << format_number(areas[i]) << ',' << (i % 2 == 0 ? "odd" : "even") << '\n';
        return os.str();
    }

    ordered_json out;
    out["mode"] = to_string(doc.mode);
    out["a"] = doc.circle.a();
    out["r0"] = doc.circle.r0();
    out["theta0"] = doc.circle.theta0();
    out["chords"] = doc.chords;
    ordered_json sectors = ordered_json::array();
    for (std::size_t i = 0; i < areas.size(); ++i) {
        ordered_json s;
        s["index"] = i + 1;
        s["theta_lo"] = part.lower(i);
        s["theta_hi"] = part.upper(i);
        s["area"] = areas[i];
        s["parity"] = i % 2 == 0 ? "odd" : "even";
        if (i < doc.std_errors.size())
            s["std_error"] = doc.std_errors[i];
        sectors.push_back(std::move(s));
    }
    out["sectors"] = std::move(sectors);
    out["odd_sum"] = doc.report.odd_sum;
    out["even_sum"] = doc.report.even_sum;
    out["total"] = doc.report.total;
    return out.dump(2) + "\n";
}

AreaDocument read_report(std::string_view json_text)
{
    const ordered_json doc = parse_document(json_text);
    if (!doc.is_object())
        throw ConfigError("report: document must be a JSON object");

    const ordered_json& mode_field = require(doc, "mode");
    const auto mode = mode_field.is_string() ? parse_mode(mode_field.get<std::string>()) : std::nullopt;
    if (!mode)
        throw ConfigError("mode: expected one of closed, quadrature, montecarlo");

    AreaDocument out{CircleConfig(number_field(doc, "a"), number_field(doc, "r0"), number_field(doc, "theta0")),
                     number_array(require(doc, "chords"), "chords"), *mode, {}, {}};
    (void)ChordFan(out.chords);

    const ordered_json& sectors = require(doc, "sectors");
    if (!sectors.is_array())
        throw ConfigError("sectors: expected an array");
    for (const auto& s : sectors) {
        if (!s.is_object())
            throw ConfigError("sectors: expected objects");
        out.report.sector_areas.push_back(number_field(s, "area"));
        if (s.contains("std_error"))
            out.std_errors.push_back(number_field(s, "std_error"));
    }
    out.report.odd_sum = number_field(doc, "odd_sum");
    out.report.even_sum = number_field(doc, "even_sum");
    out.report.total = number_field(doc, "total");
    return out;
}

ordered_json to_json(const ResidualReport& report)
{
    ordered_json out;
    out["case"] = to_string(report.case_tag);
    out["variant"] = to_string(report.variant);
    out["residual"] = report.residual;
    out["a"] = report.cfg.a();
    out["r0"] = report.cfg.r0();
    out["theta0"] = report.cfg.theta0();
    out["angles"] = report.angles;
    return out;
}

ordered_json to_json(const SolveOutcome& outcome)
{
    ordered_json out;
    out["root"] = outcome.root;
    out["residual_at_root"] = outcome.residual_at_root;
    out["iterations"] = outcome.iterations;
    out["oracle_check"] = outcome.oracle_check;
    out["bracket"] = {outcome.lo, outcome.hi};
    return out;
}

ordered_json to_json(const ResidualGrid& grid)
{
    ordered_json axes = ordered_json::array();
    for (const GridAxis& axis : grid.axes) {
        ordered_json a;
        a["name"] = axis.name;
        a["lo"] = axis.lo;
        a["hi"] = axis.hi;
        a["count"] = axis.count;
        axes.push_back(std::move(a));
    }
    ordered_json values = ordered_json::array();
    for (double v : grid.values)
        values.push_back(std::isnan(v) ? ordered_json(nullptr) : ordered_json(v));
    ordered_json out;
    out["axes"] = std::move(axes);
    out["values"] = std::move(values);
    return out;
}

std::string write_grid_csv(const ResidualGrid& grid)
{
    std::ostringstream os;
    for (const GridAxis& axis : grid.axes)
        os << axis.name << ',';
    os << "residual\n";
    for (std::size_t flat = 0; flat < grid.values.size(); ++flat) {
        std::vector<double> coords(grid.axes.size());
        std::size_t rest = flat;
        for (std::size_t d = grid.axes.size(); d-- > 0;) {
            coords[d] = grid.axes[d].at(rest % grid.axes[d].count);
            rest /= grid.axes[d].count;
        }
        for (double c : coords)
            os << format_number(c) << ',';
        const double v = grid.values[flat];
        os << (std::isnan(v) ? std::string("nan") : format_number(v)) << '\n';
    }
    return os.str();
}

GridAxis parse_grid_axis(std::string_view text)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("grid: expected name=lo:hi:n, got '" + std::string(text) + "'");
    GridAxis axis;
    axis.name = std::string(text.substr(0, eq));
    std::string_view rest = text.substr(eq + 1);

    std::array<std::string_view, 3> parts;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto colon = rest.find(':');
        if ((i < 2) == (colon == std::string_view::npos))
            throw ConfigError("grid: expected name=lo:hi:n, got '" + std::string(text) + "'");
        parts[i] = rest.substr(0, colon);
        rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    }

    auto parse_double = [&](std::string_view s) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw ConfigError("grid: bad number '" + std::string(s) + "'");
        return v;
    };
    axis.lo = parse_double(parts[0]);
    axis.hi = parse_double(parts[1]);
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), axis.count);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || axis.count == 0)
        throw ConfigError("grid: bad point count '" + std::string(parts[2]) + "'");
    return axis;
}

}  // namespace pizza
