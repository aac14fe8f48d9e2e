#pragma once

#include <map>
#include <set>
#include <string_view>

#include "fintool/techmodel.hpp"

namespace fintool {

enum class GateKind { Inverter, Nand2 };

std::string_view to_string(GateKind kind);

/// A logic-gate instance to size: gate kind plus the minimum W/L ratio n
/// used in the circuit.
struct GateSpec {
    GateKind kind = GateKind::Inverter;
    int min_wl_ratio = 1;  // n >= 1
};

/// PMOS/NMOS fin counts for one gate under a given technology.
struct FinAllocation {
    int pmos_fins = 0;
    int nmos_fins = 0;

    int total() const { return pmos_fins + nmos_fins; }
};

/// Static-CMOS gate topology: parallel branch count and series stack depth
/// per network. This generalizes beyond the two first-class gates (an
/// extension; only Inverter and Nand2 are covered by the published model and
/// the acceptance checks). A series stack of depth d needs each transistor
/// at d times the drive, and each of the parallel branches replicated.
struct GateTopology {
    int pull_up_parallel = 1;
    int pull_up_series = 1;
    int pull_down_parallel = 1;
    int pull_down_series = 1;
};

/// Topology of a first-class gate: Inverter {1,1,1,1}, Nand2 {2,1,1,2}.
GateTopology topology(GateKind kind);

/// Fins of a FinFET implementation, one (W/L) per fin: Inverter 2n,
/// 2-input NAND 6n.
int finfet_fin_count(const GateSpec& gate);
int finfet_fin_count(const GateTopology& topo, int min_wl_ratio);

/// Per-fin drive benefit of a candidate technology over the baseline:
/// ion_per_fin(candidate) / ion_per_fin(baseline). Both profiles must be
/// feasible; a baseline with zero fin current is rejected.
double current_benefit_ratio(const TechnologyProfile& candidate,
                             const TechnologyProfile& baseline);

/// Exact mathematical ceiling with a 1e-9 relative tolerance band, so that
/// quotients that are integers up to floating noise do not round up.
long long ceil_with_tolerance(double value);

/// Fin counts for a taller-fin technology delivering benefit_ratio R per
/// fin: Inverter pmos = nmos = ceil(n/R); Nand2 pmos = 2*ceil(n/R),
/// nmos = 2*ceil(2n/R).
FinAllocation fin_allocation(const GateSpec& gate, double benefit_ratio);
FinAllocation fin_allocation(const GateTopology& topo, int min_wl_ratio, double benefit_ratio);

/// Circuit footprint of the candidate gate relative to the FinFET baseline:
/// [candidate fins x candidate gate pitches x candidate fin pitch] /
/// [FinFET fins x 2 gate pitches x baseline fin pitch]. Values below 1 mean
/// the candidate is denser. Requires a FinFET baseline, a non-FinFET
/// candidate and a common gate pitch.
double relative_circuit_area(const GateSpec& gate, const TechnologyProfile& candidate,
                             const TechnologyProfile& baseline);

/// One engineered STI level on a tall fin.
struct StiLevel {
    double fin_height_nm = 0.0;  // multiple x unit height
    double sti_depth_nm = 0.0;   // full fin height - fin height
};

/// Multi-STI-depth plan delivering several W/L multiples from a single tall
/// fin by recessing the STI to different depths.
struct StiPlan {
    std::map<int, StiLevel> entries;  // keyed by W/L multiple
    double unit_height_nm = 0.0;      // height delivering one (W/L) of drive
    double full_fin_height_nm = 0.0;

    int level_count() const;  // number of distinct STI depths
};

/// Builds the STI plan for the requested W/L multiples. Throws
/// InfeasibleError listing the offending multiples when any requested
/// height exceeds the full fin height (callers should then fall back to
/// multi-fin allocation).
StiPlan sti_plan(const std::set<int>& wl_multiples, double full_fin_height_nm,
                 double unit_height_nm);

}  // namespace fintool
