#include "fintool/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fintool/device_metrics.hpp"
#include "fintool/error.hpp"
#include "fintool/stability.hpp"

namespace fintool {

void check_series(const SweepSeries& series) {
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& pt : series.points) {
        if (!std::isfinite(pt.x) || !std::isfinite(pt.y))
            throw std::invalid_argument("series '" + series.label +
                                        "' contains a non-finite value");
        if (!(pt.x > prev))
            throw std::invalid_argument("series '" + series.label +
                                        "' x values must be strictly increasing");
        prev = pt.x;
    }
}

std::vector<SweepSeries> fig3_curves(const Fig3Options& options) {
    if (options.pitches.empty())
        throw std::invalid_argument("at least one pitch required");
    if (!(options.step_nm > 0.0))
        throw std::invalid_argument("sampling step must be positive");

    std::vector<double> pitches = options.pitches;
    std::sort(pitches.begin(), pitches.end());

    std::vector<SweepSeries> out;
    for (double pitch : pitches) {
        if (!(pitch > 0.0)) throw std::invalid_argument("pitches must be positive");
        SweepSeries curve;
        std::ostringstream label;
        label << "P = " << pitch << " nm";
        curve.label = label.str();
        curve.x_name = "fin spacing S (nm)";
        curve.y_name = "fin height limit (nm)";
        curve.style = SeriesStyle::Line;
        for (double s = options.step_nm; s < pitch; s += options.step_nm)
            curve.points.push_back({s, fin_height_limit(pitch - s, s, options.k)});
        if (curve.points.empty())
            throw std::invalid_argument("sampling step larger than pitch leaves no points");
        check_series(curve);
        out.push_back(std::move(curve));
    }

    SweepSeries optimum;
    optimum.label = "EDFinFET maximum (S = 2P/3)";
    optimum.x_name = "fin spacing S (nm)";
    optimum.y_name = "fin height limit (nm)";
    optimum.style = SeriesStyle::Marker;
    for (double pitch : pitches) {
        const auto opt = max_fin_height(pitch, options.k);
        optimum.points.push_back({opt.spacing_nm, opt.height_max_nm});
    }
    check_series(optimum);
    out.push_back(std::move(optimum));

    SweepSeries finfet;
    {
        std::ostringstream label;
        label << "FinFET (W_FIN = " << options.finfet_width_nm << " nm)";
        finfet.label = label.str();
    }
    finfet.x_name = "fin spacing S (nm)";
    finfet.y_name = "fin height limit (nm)";
    finfet.style = SeriesStyle::Marker;
    for (double pitch : pitches) {
        const double s = pitch - options.finfet_width_nm;
        if (s <= 0.0) continue;
        finfet.points.push_back({s, fin_height_limit(options.finfet_width_nm, s, options.k)});
    }
    check_series(finfet);
    out.push_back(std::move(finfet));

    SweepSeries sti;
    {
        std::ostringstream label;
        label << "STI fill level (" << options.sti_depth_nm << " nm)";
        sti.label = label.str();
    }
    sti.x_name = "fin spacing S (nm)";
    sti.y_name = "fin height limit (nm)";
    sti.style = SeriesStyle::Band;
    sti.points.push_back({0.0, options.sti_depth_nm});
    sti.points.push_back({pitches.back(), options.sti_depth_nm});
    out.push_back(std::move(sti));

    return out;
}

std::vector<double> pitch_ratio_grid(double first, double last, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("ratio step must be positive");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double r = first + i * step;
        if (r > last + 1e-9) break;
        out.push_back(std::min(r, last));
    }
    return out;
}

namespace {

TechnologyProfile scaled_template(const TechnologyProfile& tmpl, double pitch_nm) {
    TechnologyProfile p = tmpl;
    p.fin_pitch_nm = pitch_nm;
    p.fin_width_nm = pitch_nm / 3.0;  // starting fin sits at the pitch optimum
    return p;
}

}  // namespace

SweepResult pitch_ratio_sweep(const TechnologyProfile& baseline,
                              std::span<const TechnologyProfile> device_templates,
                              std::span<const double> ratios) {
    if (baseline.kind != DeviceKind::FinFET)
        throw std::invalid_argument("pitch-ratio sweep baseline must be a FINFET profile");
    if (device_templates.empty())
        throw std::invalid_argument("at least one device template required");
    for (const auto& t : device_templates)
        if (t.kind == DeviceKind::FinFET)
            throw std::invalid_argument("device templates must be EDFINFET or DTEDFINFET");
    for (double r : ratios)
        if (r < 1.0 - 1e-9 || r > 1.8 + 1e-9)
            throw std::invalid_argument("pitch ratios must lie within [1.0, 1.8]");

    const std::string x_name = "pitch ratio (vs FinFET pitch)";
    const double baseline_height = effective_height(baseline);
    const double baseline_current =
        current_per_fin_mA(baseline.ion_per_um_mA, baseline_height);

    SweepResult result;

    SweepSeries height_series{"fin height ratio", {}, x_name, "ratio vs FinFET",
                              SeriesStyle::Line};
    SweepSeries area_series{"relative transistor area", {}, x_name, "ratio vs FinFET",
                            SeriesStyle::Line};
    // geometry is device-kind independent; evaluate it off the first template
    const TechnologyProfile& geometry_template = device_templates.front();
    for (double r : ratios) {
        const auto device =
            scaled_template(geometry_template, r * baseline.fin_pitch_nm);
        try {
            height_series.points.push_back({r, effective_height(device) / baseline_height});
        } catch (const InfeasibleError& e) {
            result.infeasible.push_back({height_series.label, r, e.what()});
        }
        area_series.points.push_back({r, relative_area(device, baseline)});
    }
    check_series(height_series);
    check_series(area_series);
    result.series.push_back(std::move(height_series));
    result.series.push_back(std::move(area_series));

    for (const auto& tmpl : device_templates) {
        const std::string kind_name{to_string(tmpl.kind)};
        SweepSeries per_fin{"I_ON per fin ratio (" + kind_name + ")", {}, x_name,
                            "ratio vs FinFET", SeriesStyle::Line};
        SweepSeries per_area{"I_ON per area ratio (" + kind_name + ")", {}, x_name,
                             "ratio vs FinFET", SeriesStyle::Line};
        for (double r : ratios) {
            const auto device = scaled_template(tmpl, r * baseline.fin_pitch_nm);
            try {
                const double current =
                    current_per_fin_mA(device.ion_per_um_mA, effective_height(device));
                const double current_ratio = current / baseline_current;
                per_fin.points.push_back({r, current_ratio});
                per_area.points.push_back({r, current_ratio / relative_area(device, baseline)});
            } catch (const InfeasibleError& e) {
                result.infeasible.push_back({per_fin.label, r, e.what()});
            }
        }
        check_series(per_fin);
        check_series(per_area);
        result.series.push_back(std::move(per_fin));
        result.series.push_back(std::move(per_area));
    }

    return result;
}

std::vector<SweepSeries> wl_sweep(std::span<const GateKind> gates, int n_min, int n_max,
                                  std::span<const TechnologyProfile> candidates,
                                  const TechnologyProfile& baseline) {
    if (n_min < 1 || n_max > 20 || n_min > n_max)
        throw std::invalid_argument("W/L range must satisfy 1 <= n_min <= n_max <= 20");
    if (gates.empty()) throw std::invalid_argument("at least one gate kind required");
    if (candidates.empty()) throw std::invalid_argument("at least one candidate required");

    std::vector<SweepSeries> out;
    for (GateKind gate : gates) {
        for (const auto& candidate : candidates) {
            SweepSeries series;
            series.label = std::string(to_string(gate)) + " " + candidate.name;
            series.x_name = "minimum W/L ratio n";
            series.y_name = "relative circuit area vs FinFET";
            series.style = SeriesStyle::Step;
            for (int n = n_min; n <= n_max; ++n) {
                const GateSpec spec{gate, n};
                series.points.push_back(
                    {static_cast<double>(n), relative_circuit_area(spec, candidate, baseline)});
            }
            check_series(series);
            out.push_back(std::move(series));
        }
    }
    return out;
}

namespace {

const TechnologyProfile& need_profile(std::span<const TechnologyProfile> profiles,
                                      DeviceKind kind, double pitch_nm) {
    for (const auto& p : profiles)
        if (p.kind == kind && std::abs(p.fin_pitch_nm - pitch_nm) < 1e-9) return p;
    std::ostringstream msg;
    msg << "config does not provide a " << to_string(kind) << " profile at pitch "
        << pitch_nm << " nm";
    throw ConfigError(msg.str());
}

const TechnologyProfile& need_finfet(std::span<const TechnologyProfile> profiles) {
    for (const auto& p : profiles)
        if (p.kind == DeviceKind::FinFET) return p;
    throw ConfigError("config does not provide a FINFET profile");
}

}  // namespace

FigureBundle make_figure(int id, std::span<const TechnologyProfile> profiles) {
    FigureBundle fig;
    fig.id = id;
    fig.csv_name = "fig" + std::to_string(id) + ".csv";
    fig.svg_name = "fig" + std::to_string(id) + ".svg";

    switch (id) {
        case 3: {
            const auto& finfet = need_finfet(profiles);
            Fig3Options options;
            options.pitches.clear();
            for (const auto& p : profiles)
                if (p.kind != DeviceKind::FinFET) options.pitches.push_back(p.fin_pitch_nm);
            std::sort(options.pitches.begin(), options.pitches.end());
            options.pitches.erase(
                std::unique(options.pitches.begin(), options.pitches.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                options.pitches.end());
            if (options.pitches.empty()) options.pitches = {50.0, 70.0, 90.0};
            options.k = finfet.stability_coeff_per_nm2;
            options.sti_depth_nm = finfet.sti_depth_nm;
            options.finfet_width_nm = finfet.fin_width_nm;
            fig.title = "Fin height limit vs spacing";
            fig.series = fig3_curves(options);
            fig.csv_display_decimals = 0;  // heights display as integer nm
            break;
        }
        case 4:
        case 5: {
            const auto& baseline = need_finfet(profiles);
            const auto& ed =
                need_profile(profiles, DeviceKind::EDFinFET, baseline.fin_pitch_nm);
            const auto& dt =
                need_profile(profiles, DeviceKind::DTEDFinFET, baseline.fin_pitch_nm);
            const TechnologyProfile templates[] = {ed, dt};
            const auto ratios = pitch_ratio_grid();
            auto sweep = pitch_ratio_sweep(baseline, templates, ratios);
            fig.infeasible = std::move(sweep.infeasible);
            // series layout: [height, area, ED/fin, ED/area, DT/fin, DT/area]
            if (id == 4) {
                fig.title = "Fin height and per-fin current vs pitch ratio";
                fig.series = {sweep.series[0], sweep.series[2], sweep.series[4]};
            } else {
                fig.title = "Transistor area and current per area vs pitch ratio";
                fig.series = {sweep.series[1], sweep.series[3], sweep.series[5]};
            }
            break;
        }
        case 7: {
            const auto& baseline = need_finfet(profiles);
            const double base_pitch = baseline.fin_pitch_nm;
            const double relaxed_pitch = 1.4 * base_pitch;
            const TechnologyProfile candidates[] = {
                need_profile(profiles, DeviceKind::EDFinFET, base_pitch),
                need_profile(profiles, DeviceKind::EDFinFET, relaxed_pitch),
                need_profile(profiles, DeviceKind::DTEDFinFET, base_pitch),
                need_profile(profiles, DeviceKind::DTEDFinFET, relaxed_pitch),
            };
            const GateKind gates[] = {GateKind::Inverter, GateKind::Nand2};
            fig.title = "Relative circuit area vs minimum W/L ratio";
            fig.series = wl_sweep(gates, 1, 10, candidates, baseline);
            break;
        }
        default:
            throw ConfigError("unknown figure id " + std::to_string(id) +
                              " (expected 3, 4, 5 or 7)");
    }
    return fig;
}

}  // namespace fintool
