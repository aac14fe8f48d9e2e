#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "fintool/device_metrics.hpp"
#include "fintool/report.hpp"

namespace fintool {

/// Long-format sweep CSV: header `series,x,y,y_rounded`, one row per point,
/// series in the given order. y values at full round-trip precision,
/// y_rounded at the figure's display precision.
std::string series_csv(std::span<const SweepSeries> series, int display_decimals = 2);

/// Writes text to path, creating parent directories. Throws ConfigError with
/// path context on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);

void emit_csv(std::span<const SweepSeries> series, const std::filesystem::path& path,
              int display_decimals = 2);
void emit_csv(std::span<const DensityRow> rows, const std::filesystem::path& path);

}  // namespace fintool
