#pragma once

#include <string>
#include <string_view>

namespace fintool {

/// Shortest decimal representation that round-trips to the same double.
/// Deterministic across runs; used for every numeric value written to CSV
/// and SVG output.
std::string format_double(double value);

/// Fixed-decimals formatting for display tables ("0.18", "92").
std::string format_fixed(double value, int decimals);

/// RFC-4180 field quoting: wraps the field in double quotes when it contains
/// a comma, quote or newline, doubling embedded quotes.
std::string csv_field(std::string_view text);

}  // namespace fintool
