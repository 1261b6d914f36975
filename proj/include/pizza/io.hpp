#pragma once
/**
 * @file   io.hpp
 * @brief  Run configuration documents and report serialization (JSON, CSV).
 *
 * Numbers are written in shortest round-trip form, so every double reads back bit-identical.
 * Field order is fixed.
 */

#include "pizza/conditions.hpp"
#include "pizza/geometry.hpp"
#include "pizza/oracle.hpp"
#include "pizza/solver.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pizza {

using ordered_json = nlohmann::ordered_json;

/// Document is not well-formed (bad JSON, missing or mistyped field).
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Mode
{
    closed,
    quadrature,
    montecarlo,
};

enum class OutputFormat
{
    json,
    csv,
};

[[nodiscard]] std::string_view to_string(Mode mode) noexcept;
[[nodiscard]] std::optional<Mode> parse_mode(std::string_view text) noexcept;
[[nodiscard]] std::string_view to_string(OutputFormat format) noexcept;
[[nodiscard]] std::optional<OutputFormat> parse_format(std::string_view text) noexcept;

struct RunConfig
{
    double a = 1.0;
    double r0 = 0.0;
    double theta0 = 0.0;
    std::vector<double> chords;
    Mode mode = Mode::closed;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> out;

    bool operator==(const RunConfig&) const = default;

    [[nodiscard]] CircleConfig circle() const { return CircleConfig(a, r0, theta0); }
    [[nodiscard]] ChordFan fan() const { return ChordFan(chords); }
};

/// Parses and validates. Throws ConfigError when malformed, DomainError naming the violated field otherwise.
[[nodiscard]] RunConfig read_config(std::string_view text);
[[nodiscard]] std::string write_config(const RunConfig& cfg);

/// Shortest decimal form that parses back to the same double.
[[nodiscard]] std::string format_number(double value);

struct AreaDocument
{
    CircleConfig circle;
    std::vector<double> chords;
    Mode mode = Mode::closed;
    AreaReport report;
    std::vector<double> std_errors;  ///< Monte Carlo only; empty otherwise

    bool operator==(const AreaDocument&) const = default;
};

[[nodiscard]] AreaDocument make_area_document(const RunConfig& cfg);

[[nodiscard]] std::string write_report(const AreaDocument& doc, OutputFormat format);
[[nodiscard]] AreaDocument read_report(std::string_view json_text);

[[nodiscard]] ordered_json to_json(const ResidualReport& report);
[[nodiscard]] ordered_json to_json(const SolveOutcome& outcome);
[[nodiscard]] ordered_json to_json(const ResidualGrid& grid);
[[nodiscard]] std::string write_grid_csv(const ResidualGrid& grid);

/// Parses "name=lo:hi:n".
[[nodiscard]] GridAxis parse_grid_axis(std::string_view text);

}  // namespace pizza
