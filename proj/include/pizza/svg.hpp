#pragma once

#include "pizza/geometry.hpp"

#include <string>

namespace pizza {

/// Standalone SVG 1.1 diagram: 800×800 viewport, circle at 90% of the view, sectors shaded by parity.
/// Output is byte-stable: fixed element order, coordinates printed with 6 decimals.
[[nodiscard]] std::string render_svg(const CircleConfig& cfg, const SectorPartition& part, const AreaReport& report);

}  // namespace pizza
