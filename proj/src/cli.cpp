#include "pizza/cli.hpp"

#include "pizza/conditions.hpp"
#include "pizza/errors.hpp"
#include "pizza/io.hpp"
#include "pizza/solver.hpp"
#include "pizza/svg.hpp"
#include "pizza/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pizza {

namespace {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string config_path;
    double a = 1.0;
    double r0 = 0.0;
    double theta0 = 0.0;
    std::string chords;
    std::string case_name = "general";
    std::string mode;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::string bracket;
    std::string free_index;
    std::vector<std::string> grid;
    bool audit = false;
    std::string out_path;
    std::string format;
    bool degrees = false;
};

std::vector<double> parse_list(const std::string& text, const char* flag)
{
    std::vector<double> values;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw UsageError(std::string(flag) + ": bad number '" + std::string(item) + "'");
        values.push_back(v);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return values;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Command
{
public:
    Command(const Options& opt, const CLI::App& app, std::ostream& out) : opt_(opt), app_(app), out_(out)
    {
        if (set("--config"))
            run_ = read_config(read_file(opt.config_path));
        const double angle_scale = opt.degrees ? pi / 180.0 : 1.0;
        if (set("--a"))
            run_.a = opt.a;
        if (set("--r0"))
            run_.r0 = opt.r0;
        if (set("--theta0"))
            run_.theta0 = opt.theta0 * angle_scale;
        if (set("--chords")) {
            run_.chords = parse_list(opt.chords, "--chords");
            for (double& c : run_.chords)
                c *= angle_scale;
        }
        if (set("--mode")) {
            const auto mode = parse_mode(opt.mode);
            if (!mode)
                throw UsageError("--mode: expected closed, quadrature or montecarlo");
            run_.mode = *mode;
        }
        if (set("--tol"))
            run_.tol = opt.tol;
        if (set("--seed"))
            run_.seed = opt.seed;
        if (set("--samples"))
            run_.samples = opt.samples;
        if (set("--format")) {
            const auto format = parse_format(opt.format);
            if (!format)
                throw UsageError("--format: expected json or csv");
            run_.format = *format;
        }
        if (set("--out"))
            run_.out = opt.out_path;
        if (run_.chords.empty())
            throw UsageError("--chords: at least one chord angle is required");
        if (run_.tol && !(*run_.tol > 0.0))
            throw DomainError("tol: must be > 0");
        angle_scale_ = angle_scale;
    }

    int areas()
    {
        emit(write_report(make_area_document(run_), run_.format));
        return exit_code::success;
    }

    int residual()
    {
        require_json();
        const CaseTag tag = case_tag();
        const CircleConfig cfg = run_.circle();
        ordered_json doc = to_json(residual_for_case(cfg, run_.chords, tag));
        if (opt_.audit) {
            ordered_json audit;
            audit["quadrature_residual"] = quadrature_residual(cfg, run_.fan());
            if (tag == CaseTag::six) {
                const std::array<double, 3> theta{run_.chords[0], run_.chords[1], run_.chords[2]};
                audit["as_printed_residual"] =
                    cfg.r0() > 0.0 ? ordered_json(residual_six(cfg, theta, Variant::as_printed).residual)
                                   : ordered_json(nullptr);
            }
            doc["audit"] = std::move(audit);
        }
        emit(doc.dump(2) + "\n");
        return exit_code::success;
    }

    int solve()
    {
        require_json();
        const CaseTag tag = set("--case") ? case_tag() : CaseTag::eight;
        if (!set("--case"))
            check_count(tag);
        if (opt_.free_index.empty())
            throw UsageError("--free-index: required (1-based angle index or 'r0')");
        const double tol = run_.tol.value_or(1e-12);

        ordered_json doc;
        doc["case"] = to_string(tag);
        doc["free"] = opt_.free_index;
        SolveOutcome outcome;
        std::string source = "given";

        if (opt_.free_index == "r0") {
            if (!set("--bracket")) {
                outcome = solve_pole_radius(run_.chords, run_.theta0, run_.a, tag);
                source = "analytic";
            } else {
                const auto [lo, hi] = bracket(1.0);
                SolveRequest req{CircleConfig(run_.a, 0.0, run_.theta0), run_.chords, tag,
                                 FreeParameter::pole_radius, 0, lo, hi, tol};
                outcome = solve_bracketed(req);
            }
        } else {
            std::size_t k = 0;
            const auto& s = opt_.free_index;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
            if (ec != std::errc() || ptr != s.data() + s.size() || k < 1 || k > run_.chords.size())
                throw UsageError("--free-index: expected 1.." + std::to_string(run_.chords.size()) + " or 'r0'");
            const CircleConfig cfg = run_.circle();
            double lo = 0.0;
            double hi = 0.0;
            if (set("--bracket")) {
                std::tie(lo, hi) = bracket(angle_scale_);
            } else {
                const auto scanned = scan_free_angle_bracket(cfg, run_.chords, tag, k - 1);
                if (!scanned)
                    throw SolverError(SolverError::Kind::no_sign_change,
                                      "scan: no sign change found over the free angle's window");
                std::tie(lo, hi) = *scanned;
                source = "scan (heuristic)";
            }
            outcome = solve_free_angle(SolveRequest{cfg, run_.chords, tag, FreeParameter::angle, k - 1, lo, hi, tol});
        }

        const ordered_json fields = to_json(outcome);
        for (const auto& [key, value] : fields.items())
            doc[key] = value;
        doc["bracket_source"] = source;
        emit(doc.dump(2) + "\n");
        return exit_code::success;
    }

    int sweep()
    {
        if (opt_.grid.empty())
            throw UsageError("--grid: at least one axis=lo:hi:n is required");
        std::vector<GridAxis> axes;
        for (const auto& spec : opt_.grid) {
            GridAxis axis = parse_grid_axis(spec);
            if (axis.name.starts_with("theta")) {
                axis.lo *= angle_scale_;
                axis.hi *= angle_scale_;
            }
            axes.push_back(std::move(axis));
        }
        const CaseTag tag = case_tag();
        const SweepTemplate base{run_.a, run_.r0, run_.theta0, run_.chords};
        const ResidualGrid grid = sweep_grid(base, axes, tag);
        emit(run_.format == OutputFormat::csv ? write_grid_csv(grid) : to_json(grid).dump(2) + "\n");
        return exit_code::success;
    }

    int render()
    {
        const CircleConfig cfg = run_.circle();
        const SectorPartition part = build_partition(run_.fan());
        emit(render_svg(cfg, part, area_report(cfg, part)));
        return exit_code::success;
    }

private:
    [[nodiscard]] bool set(const char* name) const { return app_.count(name) > 0; }

    void require_json() const
    {
        if (run_.format != OutputFormat::json)
            throw UsageError("--format: this subcommand writes JSON only");
    }

    void check_count(CaseTag tag) const
    {
        if (const auto n = chords_for_case(tag); n && run_.chords.size() != *n)
            throw UsageError("--chords: case '" + std::string(to_string(tag)) + "' needs " + std::to_string(*n) +
                             " angles, got " + std::to_string(run_.chords.size()));
    }

    [[nodiscard]] CaseTag case_tag() const
    {
        const auto tag = parse_case_tag(opt_.case_name);
        if (!tag)
            throw UsageError("--case: expected four, six, eight or general");
        check_count(*tag);
        return *tag;
    }

    [[nodiscard]] std::pair<double, double> bracket(double scale) const
    {
        const auto values = parse_list(opt_.bracket, "--bracket");
        if (values.size() != 2)
            throw UsageError("--bracket: expected lo,hi");
        return {values[0] * scale, values[1] * scale};
    }

    void emit(const std::string& text) const
    {
        if (!run_.out) {
            out_ << text;
            return;
        }
        std::ofstream file(*run_.out, std::ios::binary | std::ios::trunc);
        if (!file || !(file << text))
            throw UsageError("--out: cannot write '" + *run_.out + "'");
    }

    const Options& opt_;
    const CLI::App& app_;
    std::ostream& out_;
    RunConfig run_;
    double angle_scale_ = 1.0;
};

int verify(const Options& opt, const CLI::App& app, std::ostream& out)
{
    const std::uint64_t seed = app.count("--seed") ? opt.seed : 20240611;
    bool ok = true;
    for (const auto& check : run_verification(seed)) {
        out << (check.passed ? "PASS  " : "FAIL  ") << check.name << "  [" << check.detail << "]\n";
        ok = ok && check.passed;
    }
    return ok ? exit_code::success : exit_code::solver;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sector areas and alternating-sum balance for chords through an interior pole"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config_path, "JSON run configuration");
    app.add_option("--a", opt.a, "circle radius");
    app.add_option("--r0", opt.r0, "pole-to-center distance");
    app.add_option("--theta0", opt.theta0, "direction of the center seen from the pole");
    app.add_option("--chords", opt.chords, "comma-separated chord angles");
    app.add_option("--case", opt.case_name, "four | six | eight | general");
    app.add_option("--mode", opt.mode, "closed | quadrature | montecarlo");
    app.add_option("--tol", opt.tol, "tolerance override");
    app.add_option("--seed", opt.seed, "Monte Carlo / verify seed");
    app.add_option("--samples", opt.samples, "Monte Carlo sample count");
    app.add_option("--bracket", opt.bracket, "root bracket lo,hi");
    app.add_option("--free-index", opt.free_index, "1-based free angle index, or r0");
    app.add_option("--grid", opt.grid, "sweep axis name=lo:hi:n (repeatable)");
    app.add_flag("--audit", opt.audit, "include quadrature and as-printed residuals");
    app.add_option("--out", opt.out_path, "output path (default stdout)");
    app.add_option("--format", opt.format, "json | csv");
    app.add_flag("--degrees", opt.degrees, "angles given on the command line are in degrees");

    auto* areas = app.add_subcommand("areas", "per-sector areas and alternating sums");
    auto* residual = app.add_subcommand("residual", "balance residual odd_sum - pi a^2 / 2");
    auto* solve = app.add_subcommand("solve", "find a balancing angle or pole radius");
    auto* sweep = app.add_subcommand("sweep", "residual over a parameter grid");
    auto* render = app.add_subcommand("render", "SVG diagram of the chord fan");
    auto* check = app.add_subcommand("verify", "run the oracle and coefficient audit checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_code::success : exit_code::usage;
    }

    try {
        if (check->parsed())
            return verify(opt, app, out);
        Command cmd(opt, app, out);
        if (areas->parsed())
            return cmd.areas();
        if (residual->parsed())
            return cmd.residual();
        if (solve->parsed())
            return cmd.solve();
        if (sweep->parsed())
            return cmd.sweep();
        if (render->parsed())
            return cmd.render();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_code::domain;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return exit_code::solver;
    } catch (const QuadratureError& e) {
        err << "solver error: " << e.what() << "\n";
        return exit_code::solver;
    }
    return exit_code::usage;
}

}  // namespace pizza
