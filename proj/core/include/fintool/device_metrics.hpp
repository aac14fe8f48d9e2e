#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fintool/techmodel.hpp"

namespace fintool {

/// Pre-STI mechanical height limit of the profile's fin system: the
/// profile's own W/S for FinFET, the pitch optimum for EDFinFET/DTEDFinFET.
double height_limit(const TechnologyProfile& profile);

/// Conducting fin height above the STI surface (Table-I column B).
/// FinFET: k*W*(P-W)^2 - STI. EDFinFET/DTEDFinFET: 4*k*P^3/27 - STI.
/// Throws InfeasibleError ("fin fully submerged in STI") when the result is
/// not positive; the error carries the raw pre-STI height.
double effective_height(const TechnologyProfile& profile);

/// Drive current of one fin in mA: A * 2B, sidewalls only (the fin top is
/// not counted). Height is converted nm -> um.
double current_per_fin_mA(double ion_per_um_mA, double effective_height_nm);

/// Footprint of one single-fin transistor: gate pitches per device x gate
/// pitch x fin pitch, in nm^2.
double transistor_area_nm2(const TechnologyProfile& profile);

/// transistor_area(profile) / transistor_area(reference). Both profiles must
/// share the same gate pitch (the ratio is then independent of its value);
/// mismatches are rejected with std::invalid_argument.
double relative_area(const TechnologyProfile& profile, const TechnologyProfile& reference);

/// One row of the density comparison report. Values are kept at full
/// precision; display rounding happens only at serialization.
struct DensityRow {
    std::string name;
    DeviceKind kind = DeviceKind::FinFET;
    double pitch_nm = 0.0;
    double ion_per_um_mA = 0.0;         // A
    double effective_height_nm = 0.0;   // B
    double ion_per_fin_mA = 0.0;        // A x 2B
    double relative_area = 0.0;         // vs the reference profile
    double ion_per_area_mA = 0.0;       // per reference-transistor footprint
};

/// Builds one DensityRow per profile against the named reference profile.
/// Per-profile infeasibility propagates tagged with the profile name.
std::vector<DensityRow> table1(std::span<const TechnologyProfile> profiles,
                               std::string_view reference_name);

/// Round-half-away-from-zero at a fixed number of decimals; the display
/// rounding used everywhere a value is compared at paper precision.
double display_round(double value, int decimals);

/// CSV serialization of density rows. Fixed header
/// `name,kind,pitch_nm,ion_per_um_mA,eff_height_nm,ion_per_fin_mA,rel_area,ion_per_area`
/// followed by display-rounded companion columns for the four compared
/// quantities.
std::string density_rows_csv(std::span<const DensityRow> rows);

}  // namespace fintool
