#pragma once

#include <optional>
#include <vector>

#include "fintool/techmodel.hpp"

namespace fintool {

/// Derived geometric state of one fin system. All lengths in nm.
struct FinGeometry {
    double pitch_nm = 0.0;
    double fin_width_nm = 0.0;
    double spacing_nm = 0.0;        // S = P - W_FIN
    double gapfill_space_nm = 0.0;  // S' = S - 2*epi (= S for FinFET)
    double height_limit_nm = 0.0;   // k * W_FIN * S^2
    std::optional<double> effective_height_nm;  // height above STI; empty if submerged
};

/// Mechanical fin-height limit k * W * S^2. The wet-clean surface-tension
/// constraint on a fin of width W with spacing S to its neighbours.
/// Rejects negative W or S and non-positive k with std::invalid_argument.
double fin_height_limit(double fin_width_nm, double spacing_nm, double k);

struct PitchOptimum {
    double height_max_nm = 0.0;   // 4*k*P^3/27
    double spacing_nm = 0.0;      // 2P/3
    double fin_width_nm = 0.0;    // P/3
};

/// Closed-form maximizer of fin_height_limit over S in (0, P) with W = P - S.
/// Throws std::invalid_argument for non-positive pitch or k (configuration
/// errors, not numeric domain errors).
PitchOptimum max_fin_height(double pitch_nm, double k);

/// All spacings S strictly inside (0, P) with k*(P-S)*S^2 = target_height_nm,
/// ascending. The cubic is solved analytically (trigonometric form for the
/// three-real-root case) and each root is polished by bisection to
/// |dS| < 1e-6 nm. Empty result means no solution (target above the maximum).
std::vector<double> spacing_for_height(double pitch_nm, double target_height_nm, double k);

enum class GapFillStatus {
    Feasible,   // S' >= min gap-fill space
    TooNarrow,  // 0 < S' < min gap-fill space
    Merged,     // S' <= 0: epitaxy closes the trench entirely
};

struct GapFill {
    double space_nm = 0.0;  // S' = S - 2*epi
    GapFillStatus status = GapFillStatus::Feasible;

    bool feasible() const { return status == GapFillStatus::Feasible; }
};

/// Space left for STI fill after conformal epitaxy on both trench sidewalls.
GapFill gapfill_space(double spacing_nm, double epi_nm, double min_gapfill_nm);

/// Assembles the geometric state of a validated profile using the profile's
/// own fin width (Eq.-(ii)-style height limit, not the pitch optimum).
FinGeometry fin_geometry(const TechnologyProfile& profile);

}  // namespace fintool
