#include "fintool/csv.hpp"

#include <fstream>

#include "fintool/error.hpp"
#include "fintool/textfmt.hpp"

namespace fintool {

std::string series_csv(std::span<const SweepSeries> series, int display_decimals) {
    std::string out = "series,x,y,y_rounded\n";
    for (const auto& s : series) {
        check_series(s);
        for (const auto& pt : s.points) {
            out += csv_field(s.label);
            out += ',';
            out += format_double(pt.x);
            out += ',';
            out += format_double(pt.y);
            out += ',';
            out += format_fixed(display_round(pt.y, display_decimals), display_decimals);
            out += '\n';
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

void emit_csv(std::span<const SweepSeries> series, const std::filesystem::path& path,
              int display_decimals) {
    write_file(path, series_csv(series, display_decimals));
}

void emit_csv(std::span<const DensityRow> rows, const std::filesystem::path& path) {
    write_file(path, density_rows_csv(rows));
}

}  // namespace fintool
