#include "fintool/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fintool/device_metrics.hpp"
#include "fintool/error.hpp"

namespace fintool {

std::string_view to_string(GateKind kind) {
    return kind == GateKind::Inverter ? "INV" : "NAND2";
}

GateTopology topology(GateKind kind) {
    if (kind == GateKind::Inverter) return {1, 1, 1, 1};
    return {2, 1, 1, 2};  // NAND2: two parallel PMOS, two series NMOS
}

namespace {

void check_gate(const GateSpec& gate) {
    if (gate.min_wl_ratio < 1)
        throw std::invalid_argument("minimum W/L ratio n must be >= 1");
}

void check_topology(const GateTopology& t) {
    if (t.pull_up_parallel < 1 || t.pull_up_series < 1 || t.pull_down_parallel < 1 ||
        t.pull_down_series < 1)
        throw std::invalid_argument("gate topology counts must be >= 1");
}

}  // namespace

int finfet_fin_count(const GateTopology& topo, int n) {
    check_topology(topo);
    if (n < 1) throw std::invalid_argument("minimum W/L ratio n must be >= 1");
    // each transistor in a series stack of depth d carries d*n (W/L)s,
    // i.e. d*n fins in a one-(W/L)-per-fin technology
    const int up = topo.pull_up_parallel * topo.pull_up_series * (n * topo.pull_up_series);
    const int down =
        topo.pull_down_parallel * topo.pull_down_series * (n * topo.pull_down_series);
    return up + down;
}

int finfet_fin_count(const GateSpec& gate) {
    check_gate(gate);
    return finfet_fin_count(topology(gate.kind), gate.min_wl_ratio);
}

double current_benefit_ratio(const TechnologyProfile& candidate,
                             const TechnologyProfile& baseline) {
    const double baseline_current =
        current_per_fin_mA(baseline.ion_per_um_mA, effective_height(baseline));
    if (!(baseline_current > 0.0))
        throw std::invalid_argument("baseline profile '" + baseline.name +
                                    "' has zero per-fin current");
    const double candidate_current =
        current_per_fin_mA(candidate.ion_per_um_mA, effective_height(candidate));
    return candidate_current / baseline_current;
}

long long ceil_with_tolerance(double value) {
    const double nearest = std::round(value);
    if (std::abs(value - nearest) <= 1e-9 * std::max(1.0, std::abs(value)))
        return static_cast<long long>(nearest);
    return static_cast<long long>(std::ceil(value));
}

FinAllocation fin_allocation(const GateTopology& topo, int n, double benefit_ratio) {
    check_topology(topo);
    if (n < 1) throw std::invalid_argument("minimum W/L ratio n must be >= 1");
    if (!(benefit_ratio > 0.0))
        throw std::invalid_argument("benefit ratio must be positive");

    auto fins_per_network = [&](int parallel, int series) {
        const double required = static_cast<double>(n) * series;  // (W/L) per transistor
        return parallel * series *
               static_cast<int>(ceil_with_tolerance(required / benefit_ratio));
    };

    FinAllocation alloc;
    alloc.pmos_fins = fins_per_network(topo.pull_up_parallel, topo.pull_up_series);
    alloc.nmos_fins = fins_per_network(topo.pull_down_parallel, topo.pull_down_series);
    return alloc;
}

FinAllocation fin_allocation(const GateSpec& gate, double benefit_ratio) {
    check_gate(gate);
    return fin_allocation(topology(gate.kind), gate.min_wl_ratio, benefit_ratio);
}

double relative_circuit_area(const GateSpec& gate, const TechnologyProfile& candidate,
                             const TechnologyProfile& baseline) {
    check_gate(gate);
    if (baseline.kind != DeviceKind::FinFET)
        throw std::invalid_argument("circuit area baseline must be a FINFET profile");
    if (candidate.kind == DeviceKind::FinFET)
        throw std::invalid_argument("circuit area candidate must be EDFINFET or DTEDFINFET");
    if (candidate.gate_pitch_nm != baseline.gate_pitch_nm)
        throw std::invalid_argument("circuit area comparison requires a common gate pitch");

    const double ratio = current_benefit_ratio(candidate, baseline);
    const FinAllocation alloc = fin_allocation(gate, ratio);
    const double candidate_area = static_cast<double>(alloc.total()) *
                                  candidate.gate_pitches_per_device * candidate.fin_pitch_nm;
    const double baseline_area = static_cast<double>(finfet_fin_count(gate)) *
                                 baseline.gate_pitches_per_device * baseline.fin_pitch_nm;
    return candidate_area / baseline_area;
}

int StiPlan::level_count() const {
    std::set<double> depths;
    for (const auto& [multiple, level] : entries) depths.insert(level.sti_depth_nm);
    return static_cast<int>(depths.size());
}

StiPlan sti_plan(const std::set<int>& wl_multiples, double full_fin_height_nm,
                 double unit_height_nm) {
    if (!(unit_height_nm > 0.0))
        throw std::invalid_argument("unit height must be positive");
    if (full_fin_height_nm < 0.0)
        throw std::invalid_argument("full fin height must be nonnegative");
    for (int m : wl_multiples)
        if (m < 1) throw std::invalid_argument("W/L multiples must be positive integers");

    const double budget_slack = 1e-9 * std::max(1.0, full_fin_height_nm);
    std::vector<int> over_budget;
    for (int m : wl_multiples)
        if (m * unit_height_nm > full_fin_height_nm + budget_slack) over_budget.push_back(m);
    if (!over_budget.empty()) {
        std::ostringstream msg;
        msg << "requested W/L multiples exceed the single-fin budget of "
            << full_fin_height_nm / unit_height_nm << " (W/L)s:";
        for (int m : over_budget) msg << ' ' << m;
        throw InfeasibleError(msg.str(), full_fin_height_nm);
    }

    StiPlan plan;
    plan.unit_height_nm = unit_height_nm;
    plan.full_fin_height_nm = full_fin_height_nm;
    for (int m : wl_multiples) {
        StiLevel level;
        level.fin_height_nm = std::min(m * unit_height_nm, full_fin_height_nm);
        level.sti_depth_nm = full_fin_height_nm - level.fin_height_nm;
        plan.entries.emplace(m, level);
    }
    return plan;
}

}  // namespace fintool
