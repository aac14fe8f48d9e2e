#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "fintool/report.hpp"

namespace fintool {

/// Renders series as a self-contained SVG line/marker chart: axes with
/// labeled ticks, legend, step polylines for Step series and a hatched
/// region for Band series. No external assets. Each series element carries
/// its data-space coordinates in a `data-points` attribute and the root
/// carries the axis ranges, so emitted charts can be cross-checked against
/// their CSV twins.
std::string render_svg(std::span<const SweepSeries> series, std::string_view title);

void emit_svg(std::span<const SweepSeries> series, const std::filesystem::path& path,
              std::string_view title);

}  // namespace fintool
