#pragma once

#include <span>
#include <string>
#include <vector>

#include "fintool/circuit.hpp"
#include "fintool/techmodel.hpp"

namespace fintool {

struct SeriesPoint {
    double x = 0.0;
    double y = 0.0;
};

enum class SeriesStyle {
    Line,    // plain polyline
    Step,    // step-after polyline, jumps preserved
    Marker,  // symbols only
    Band,    // horizontal reference level with shaded region below
};

/// One labeled data series of a sweep. x must be strictly increasing and all
/// values finite.
struct SweepSeries {
    std::string label;
    std::vector<SeriesPoint> points;
    std::string x_name;  // axis label with units
    std::string y_name;
    SeriesStyle style = SeriesStyle::Line;
};

/// Throws std::invalid_argument unless x is strictly increasing and every
/// value is finite.
void check_series(const SweepSeries& series);

struct Fig3Options {
    std::vector<double> pitches{50.0, 70.0, 90.0};
    double k = 0.015;
    double sti_depth_nm = 60.0;
    double finfet_width_nm = 5.0;
    double step_nm = 0.5;
};

/// Height-limit-vs-spacing curves: per pitch, k*(P-S)*S^2 sampled over
/// S in (0, P); marker series for the pitch optimum (S = 2P/3) and for the
/// fixed-width FinFET point (S = P - W); an STI reference band.
std::vector<SweepSeries> fig3_curves(const Fig3Options& options);

/// A sweep point that could not be evaluated (kept, never silently dropped).
struct SweepDiagnostic {
    std::string series;
    double x = 0.0;
    std::string reason;
};

struct SweepResult {
    std::vector<SweepSeries> series;
    std::vector<SweepDiagnostic> infeasible;
};

/// Evenly spaced ratios over [first, last]; the grid used by the pitch-ratio
/// figures (default 1.0 to 1.8, step 0.05).
std::vector<double> pitch_ratio_grid(double first = 1.0, double last = 1.8,
                                     double step = 0.05);

/// Sweeps device pitch as a multiple of the baseline FinFET pitch.
/// `device_templates` supply the per-device parameters (drive current
/// density, epi, ...) whose fin pitch is scaled; geometry series (fin height
/// ratio, relative transistor area) are emitted once, current series
/// (per fin, per area) once per template. Ratios must lie within [1.0, 1.8].
SweepResult pitch_ratio_sweep(const TechnologyProfile& baseline,
                              std::span<const TechnologyProfile> device_templates,
                              std::span<const double> ratios);

/// Relative circuit area versus the minimum W/L ratio n, one step series per
/// (gate, candidate) pair. n_min..n_max must lie within [1, 20].
std::vector<SweepSeries> wl_sweep(std::span<const GateKind> gates, int n_min, int n_max,
                                  std::span<const TechnologyProfile> candidates,
                                  const TechnologyProfile& baseline);

/// One regenerable figure: its series plus output naming.
struct FigureBundle {
    int id = 0;
    std::string title;
    std::string csv_name;  // e.g. "fig3.csv"
    std::string svg_name;
    std::vector<SweepSeries> series;
    std::vector<SweepDiagnostic> infeasible;
    int csv_display_decimals = 2;  // display precision of the y_rounded column
};

/// Builds figure 3, 4, 5 or 7 from a profile set (normally the shipped
/// example config). Throws ConfigError when the set lacks the profiles a
/// figure needs.
FigureBundle make_figure(int id, std::span<const TechnologyProfile> profiles);

}  // namespace fintool
