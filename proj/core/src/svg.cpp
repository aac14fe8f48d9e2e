#include "fintool/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fintool/csv.hpp"
#include "fintool/textfmt.hpp"

namespace fintool {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 560.0;
constexpr double kPlotLeft = 72.0;
constexpr double kPlotRight = 630.0;
constexpr double kPlotTop = 52.0;
constexpr double kPlotBottom = 505.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

struct Axis {
    double min = 0.0;
    double max = 1.0;
    double step = 0.2;
};

// tick step from the 1/2/2.5/5 x 10^k family, axis snapped outward to tick
// boundaries so every data point lies inside the plotted range
Axis nice_axis(double lo, double hi) {
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) {
        const double pad = std::max(1.0, std::abs(lo) * 0.1);
        lo -= pad;
        hi += pad;
    }
    const double raw_step = (hi - lo) / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw_step)));
    const double norm = raw_step / mag;
    double factor = 10.0;
    for (double candidate : {1.0, 2.0, 2.5, 5.0}) {
        if (norm <= candidate) {
            factor = candidate;
            break;
        }
    }
    Axis axis;
    axis.step = factor * mag;
    axis.min = std::floor(lo / axis.step) * axis.step;
    axis.max = std::ceil(hi / axis.step) * axis.step;
    return axis;
}

int tick_decimals(double step) {
    for (int d = 0; d < 9; ++d) {
        const double scaled = step * std::pow(10.0, d);
        if (std::abs(scaled - std::round(scaled)) < 1e-9 * std::max(1.0, scaled)) return d;
    }
    return 9;
}

std::string px(double v) {
    return format_fixed(v, 2);
}

std::string escape_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string data_points_attr(const SweepSeries& s) {
    std::string out;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) out.push_back(' ');
        out += format_double(s.points[i].x);
        out.push_back(':');
        out += format_double(s.points[i].y);
    }
    return out;
}

class Scale {
public:
    Scale(Axis x, Axis y) : x_(x), y_(y) {}

    double sx(double x) const {
        return kPlotLeft + (x - x_.min) / (x_.max - x_.min) * (kPlotRight - kPlotLeft);
    }
    double sy(double y) const {
        return kPlotBottom - (y - y_.min) / (y_.max - y_.min) * (kPlotBottom - kPlotTop);
    }

private:
    Axis x_, y_;
};

void render_marker(std::ostream& out, double cx, double cy, int shape, const char* color) {
    switch (shape % 3) {
        case 0:
            out << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(cy)
                << "\" r=\"4\" fill=\"" << color << "\"/>";
            break;
        case 1:
            out << "<rect x=\"" << px(cx - 3.5) << "\" y=\"" << px(cy - 3.5)
                << "\" width=\"7\" height=\"7\" fill=\"" << color << "\"/>";
            break;
        default:
            out << "<path d=\"M " << px(cx) << ' ' << px(cy - 4.5) << " L " << px(cx + 4.5)
                << ' ' << px(cy) << " L " << px(cx) << ' ' << px(cy + 4.5) << " L "
                << px(cx - 4.5) << ' ' << px(cy) << " Z\" fill=\"" << color << "\"/>";
            break;
    }
}

}  // namespace

std::string render_svg(std::span<const SweepSeries> series, std::string_view title) {
    if (series.empty()) throw std::invalid_argument("cannot render an empty series list");

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    std::size_t total_points = 0;
    for (const auto& s : series) {
        check_series(s);
        for (const auto& pt : s.points) {
            xmin = std::min(xmin, pt.x);
            xmax = std::max(xmax, pt.x);
            ymin = std::min(ymin, pt.y);
            ymax = std::max(ymax, pt.y);
            ++total_points;
        }
    }
    if (total_points == 0) throw std::invalid_argument("cannot render series without points");

    const Axis ax = nice_axis(xmin, xmax);
    const Axis ay = nice_axis(ymin, ymax);
    const Scale scale(ax, ay);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\""
        << " font-family=\"Helvetica, Arial, sans-serif\""
        << " data-x-min=\"" << format_double(ax.min) << "\" data-x-max=\""
        << format_double(ax.max) << "\" data-y-min=\"" << format_double(ay.min)
        << "\" data-y-max=\"" << format_double(ay.max) << "\">\n";
    svg << "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"8\""
        << " height=\"8\" patternTransform=\"rotate(45)\">"
        << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#9a9a9a\" stroke-width=\"1\"/>"
        << "</pattern></defs>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"" << px((kPlotLeft + kPlotRight) / 2.0)
        << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << escape_text(title)
        << "</text>\n";

    // gridlines and ticks
    const int xd = tick_decimals(ax.step);
    const int yd = tick_decimals(ay.step);
    const int x_ticks = static_cast<int>(std::round((ax.max - ax.min) / ax.step));
    const int y_ticks = static_cast<int>(std::round((ay.max - ay.min) / ay.step));
    svg << "<g font-size=\"12\" fill=\"#333333\">\n";
    for (int i = 0; i <= x_ticks; ++i) {
        const double v = ax.min + i * ax.step;
        const double x = scale.sx(v);
        svg << "<line x1=\"" << px(x) << "\" y1=\"" << px(kPlotTop) << "\" x2=\"" << px(x)
            << "\" y2=\"" << px(kPlotBottom) << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>";
        svg << "<text x=\"" << px(x) << "\" y=\"" << px(kPlotBottom + 18.0)
            << "\" text-anchor=\"middle\">" << format_fixed(v, xd) << "</text>\n";
    }
    for (int i = 0; i <= y_ticks; ++i) {
        const double v = ay.min + i * ay.step;
        const double y = scale.sy(v);
        svg << "<line x1=\"" << px(kPlotLeft) << "\" y1=\"" << px(y) << "\" x2=\""
            << px(kPlotRight) << "\" y2=\"" << px(y)
            << "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>";
        svg << "<text x=\"" << px(kPlotLeft - 8.0) << "\" y=\"" << px(y + 4.0)
            << "\" text-anchor=\"end\">" << format_fixed(v, yd) << "</text>\n";
    }
    svg << "</g>\n";

    // axis labels come from the first series that names them
    std::string x_name, y_name;
    for (const auto& s : series) {
        if (x_name.empty()) x_name = s.x_name;
        if (y_name.empty()) y_name = s.y_name;
    }
    svg << "<text x=\"" << px((kPlotLeft + kPlotRight) / 2.0) << "\" y=\""
        << px(kPlotBottom + 42.0) << "\" text-anchor=\"middle\" font-size=\"13\">"
        << escape_text(x_name) << "</text>\n";
    svg << "<text x=\"20\" y=\"" << px((kPlotTop + kPlotBottom) / 2.0)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 "
        << px((kPlotTop + kPlotBottom) / 2.0) << ")\">" << escape_text(y_name) << "</text>\n";

    // series
    int marker_shape = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.points.empty()) continue;
        const char* color = kPalette[i % kPaletteSize];
        svg << "<g data-label=\"" << escape_text(s.label) << "\" data-points=\""
            << data_points_attr(s) << "\">";
        switch (s.style) {
            case SeriesStyle::Band: {
                const double level = s.points.front().y;
                const double top = scale.sy(std::min(level, std::max(ay.min, level)));
                svg << "<rect x=\"" << px(kPlotLeft) << "\" y=\"" << px(top) << "\" width=\""
                    << px(kPlotRight - kPlotLeft) << "\" height=\""
                    << px(kPlotBottom - top) << "\" fill=\"url(#hatch)\" opacity=\"0.7\"/>";
                svg << "<line x1=\"" << px(kPlotLeft) << "\" y1=\"" << px(scale.sy(level))
                    << "\" x2=\"" << px(kPlotRight) << "\" y2=\"" << px(scale.sy(level))
                    << "\" stroke=\"#6a6a6a\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>";
                break;
            }
            case SeriesStyle::Marker: {
                for (const auto& pt : s.points)
                    render_marker(svg, scale.sx(pt.x), scale.sy(pt.y), marker_shape, color);
                ++marker_shape;
                break;
            }
            case SeriesStyle::Step:
            case SeriesStyle::Line: {
                svg << "<polyline fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"2\" points=\"";
                for (std::size_t j = 0; j < s.points.size(); ++j) {
                    const auto& pt = s.points[j];
                    if (j) {
                        svg << ' ';
                        if (s.style == SeriesStyle::Step)  // horizontal run, then the jump
                            svg << px(scale.sx(pt.x)) << ',' << px(scale.sy(s.points[j - 1].y))
                                << ' ';
                    }
                    svg << px(scale.sx(pt.x)) << ',' << px(scale.sy(pt.y));
                }
                svg << "\"/>";
                break;
            }
        }
        svg << "</g>\n";
    }

    // plot frame
    svg << "<rect x=\"" << px(kPlotLeft) << "\" y=\"" << px(kPlotTop) << "\" width=\""
        << px(kPlotRight - kPlotLeft) << "\" height=\"" << px(kPlotBottom - kPlotTop)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // legend
    svg << "<g font-size=\"12\" fill=\"#222222\">\n";
    double legend_y = kPlotTop + 8.0;
    const double legend_x = kPlotRight + 16.0;
    marker_shape = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.points.empty()) continue;
        const char* color = kPalette[i % kPaletteSize];
        if (s.style == SeriesStyle::Marker) {
            render_marker(svg, legend_x + 11.0, legend_y - 4.0, marker_shape, color);
            ++marker_shape;
        } else if (s.style == SeriesStyle::Band) {
            svg << "<rect x=\"" << px(legend_x) << "\" y=\"" << px(legend_y - 10.0)
                << "\" width=\"22\" height=\"10\" fill=\"url(#hatch)\" stroke=\"#6a6a6a\"/>";
        } else {
            svg << "<line x1=\"" << px(legend_x) << "\" y1=\"" << px(legend_y - 4.0)
                << "\" x2=\"" << px(legend_x + 22.0) << "\" y2=\"" << px(legend_y - 4.0)
                << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>";
        }
        svg << "<text x=\"" << px(legend_x + 28.0) << "\" y=\"" << px(legend_y) << "\">"
            << escape_text(s.label) << "</text>\n";
        legend_y += 20.0;
    }
    svg << "</g>\n";
    svg << "</svg>\n";
    return svg.str();
}

void emit_svg(std::span<const SweepSeries> series, const std::filesystem::path& path,
              std::string_view title) {
    write_file(path, render_svg(series, title));
}

}  // namespace fintool
