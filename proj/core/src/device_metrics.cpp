#include "fintool/device_metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fintool/error.hpp"
#include "fintool/stability.hpp"
#include "fintool/textfmt.hpp"

namespace fintool {

double height_limit(const TechnologyProfile& p) {
    if (p.kind == DeviceKind::FinFET) {
        const double spacing = p.fin_pitch_nm - p.fin_width_nm;
        return fin_height_limit(p.fin_width_nm, spacing, p.stability_coeff_per_nm2);
    }
    return max_fin_height(p.fin_pitch_nm, p.stability_coeff_per_nm2).height_max_nm;
}

double effective_height(const TechnologyProfile& p) {
    const double raw = height_limit(p);
    const double effective = raw - p.sti_depth_nm;
    if (!(effective > 0.0)) {
        std::ostringstream msg;
        msg << "fin fully submerged in STI: height limit " << raw << " nm <= STI depth "
            << p.sti_depth_nm << " nm";
        throw InfeasibleError(msg.str(), raw);
    }
    return effective;
}

double current_per_fin_mA(double ion_per_um_mA, double effective_height_nm) {
    if (ion_per_um_mA < 0.0)
        throw std::invalid_argument("drive current density must be nonnegative");
    if (effective_height_nm < 0.0)
        throw std::invalid_argument("effective height must be nonnegative");
    return ion_per_um_mA * 2.0 * (effective_height_nm / 1000.0);
}

double transistor_area_nm2(const TechnologyProfile& p) {
    return p.gate_pitches_per_device * p.gate_pitch_nm * p.fin_pitch_nm;
}

double relative_area(const TechnologyProfile& p, const TechnologyProfile& reference) {
    if (p.gate_pitch_nm != reference.gate_pitch_nm)
        throw std::invalid_argument(
            "relative areas require a common gate pitch (got " +
            format_double(p.gate_pitch_nm) + " vs " + format_double(reference.gate_pitch_nm) +
            " nm)");
    return transistor_area_nm2(p) / transistor_area_nm2(reference);
}

std::vector<DensityRow> table1(std::span<const TechnologyProfile> profiles,
                               std::string_view reference_name) {
    const TechnologyProfile* reference = nullptr;
    for (const auto& p : profiles)
        if (p.name == reference_name) reference = &p;
    if (!reference)
        throw std::invalid_argument("reference profile '" + std::string(reference_name) +
                                    "' not in profile list");

    std::vector<DensityRow> rows;
    rows.reserve(profiles.size());
    for (const auto& p : profiles) {
        DensityRow row;
        row.name = p.name;
        row.kind = p.kind;
        row.pitch_nm = p.fin_pitch_nm;
        row.ion_per_um_mA = p.ion_per_um_mA;
        try {
            row.effective_height_nm = effective_height(p);
        } catch (const InfeasibleError& e) {
            throw InfeasibleError("profile '" + p.name + "': " + e.what(),
                                  e.raw_height_nm());
        }
        row.ion_per_fin_mA = current_per_fin_mA(p.ion_per_um_mA, row.effective_height_nm);
        row.relative_area = relative_area(p, *reference);
        row.ion_per_area_mA = row.ion_per_fin_mA / row.relative_area;
        rows.push_back(std::move(row));
    }
    return rows;
}

double display_round(double value, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    return std::round(value * scale) / scale;
}

std::string density_rows_csv(std::span<const DensityRow> rows) {
    std::string out =
        "name,kind,pitch_nm,ion_per_um_mA,eff_height_nm,ion_per_fin_mA,rel_area,ion_per_area,"
        "eff_height_nm_rounded,ion_per_fin_mA_rounded,rel_area_rounded,ion_per_area_rounded\n";
    for (const auto& r : rows) {
        out += csv_field(r.name);
        out += ',';
        out += to_string(r.kind);
        out += ',';
        out += format_double(r.pitch_nm);
        out += ',';
        out += format_double(r.ion_per_um_mA);
        out += ',';
        out += format_double(r.effective_height_nm);
        out += ',';
        out += format_double(r.ion_per_fin_mA);
        out += ',';
        out += format_double(r.relative_area);
        out += ',';
        out += format_double(r.ion_per_area_mA);
        out += ',';
        out += format_fixed(display_round(r.effective_height_nm, 0), 0);
        out += ',';
        out += format_fixed(display_round(r.ion_per_fin_mA, 2), 2);
        out += ',';
        out += format_fixed(display_round(r.relative_area, 1), 1);
        out += ',';
        out += format_fixed(display_round(r.ion_per_area_mA, 2), 2);
        out += '\n';
    }
    return out;
}

}  // namespace fintool
