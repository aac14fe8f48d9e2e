#include "fintool/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fintool {

namespace {

// Relative slack for classifying a target height as "at the maximum"
// (tangency) rather than above it. Absorbs floating noise when callers pass
// back a height they obtained from max_fin_height.
constexpr double kTangencyTol = 1e-9;

double height_at(double pitch, double spacing, double k) {
    return k * (pitch - spacing) * spacing * spacing;
}

// One round of bisection polishing around an analytic root. Keeps the
// analytic value when the bracket does not straddle a sign change (double
// roots at tangency have none).
double polish_root(double root, double pitch, double target, double k) {
    const double h = std::max(1e-4, 1e-9 * pitch);
    double lo = std::max(root - h, 0.0);
    double hi = std::min(root + h, pitch);
    auto f = [&](double s) { return height_at(pitch, s, k) - target; };
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) return root;

    for (int i = 0; i < 80 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double fin_height_limit(double fin_width_nm, double spacing_nm, double k) {
    if (fin_width_nm < 0.0) throw std::invalid_argument("fin width must be nonnegative");
    if (spacing_nm < 0.0) throw std::invalid_argument("spacing must be nonnegative");
    if (!(k > 0.0)) throw std::invalid_argument("stability coefficient must be positive");
    return k * fin_width_nm * spacing_nm * spacing_nm;
}

PitchOptimum max_fin_height(double pitch_nm, double k) {
    if (!(pitch_nm > 0.0)) throw std::invalid_argument("pitch must be positive");
    if (!(k > 0.0)) throw std::invalid_argument("stability coefficient must be positive");
    PitchOptimum opt;
    opt.height_max_nm = 4.0 * k * pitch_nm * pitch_nm * pitch_nm / 27.0;
    opt.spacing_nm = 2.0 * pitch_nm / 3.0;
    opt.fin_width_nm = pitch_nm / 3.0;
    return opt;
}

std::vector<double> spacing_for_height(double pitch_nm, double target_height_nm, double k) {
    if (!(pitch_nm > 0.0)) throw std::invalid_argument("pitch must be positive");
    if (!(k > 0.0)) throw std::invalid_argument("stability coefficient must be positive");
    if (target_height_nm < 0.0)
        throw std::invalid_argument("target height must be nonnegative");

    const double p3 = pitch_nm * pitch_nm * pitch_nm;
    const double h_max = 4.0 * k * p3 / 27.0;
    if (target_height_nm > h_max * (1.0 + kTangencyTol)) return {};
    if (target_height_nm == 0.0) return {};  // roots sit on the interval boundary

    // k*(P-S)*S^2 = H  <=>  S^3 - P*S^2 + H/k = 0. Substituting S = t + P/3
    // gives the depressed cubic t^3 + p*t + q with p = -P^2/3 and
    // q = H/k - 2P^3/27. For H in [0, Hmax] all three roots are real and the
    // trigonometric form applies.
    const double q = target_height_nm / k - 2.0 * p3 / 27.0;
    const double cos_arg = std::clamp(-27.0 * q / (2.0 * p3), -1.0, 1.0);
    const double theta = std::acos(cos_arg);
    const double radius = 2.0 * pitch_nm / 3.0;

    std::vector<double> roots;
    for (int i = 0; i < 3; ++i) {
        const double t =
            radius * std::cos((theta - 2.0 * std::numbers::pi * i) / 3.0);
        double s = t + pitch_nm / 3.0;
        if (!(s > 0.0 && s < pitch_nm)) continue;
        s = polish_root(s, pitch_nm, std::min(target_height_nm, h_max), k);
        if (s > 0.0 && s < pitch_nm) roots.push_back(s);
    }

    std::sort(roots.begin(), roots.end());
    // merge the pair that collapses at tangency
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-6; }),
                roots.end());
    return roots;
}

GapFill gapfill_space(double spacing_nm, double epi_nm, double min_gapfill_nm) {
    if (!(spacing_nm > 0.0)) throw std::invalid_argument("spacing must be positive");
    if (epi_nm < 0.0) throw std::invalid_argument("epi thickness must be nonnegative");

    GapFill result;
    result.space_nm = spacing_nm - 2.0 * epi_nm;
    if (result.space_nm <= 0.0)
        result.status = GapFillStatus::Merged;
    else if (result.space_nm < min_gapfill_nm)
        result.status = GapFillStatus::TooNarrow;
    else
        result.status = GapFillStatus::Feasible;
    return result;
}

FinGeometry fin_geometry(const TechnologyProfile& profile) {
    FinGeometry g;
    g.pitch_nm = profile.fin_pitch_nm;
    g.fin_width_nm = profile.fin_width_nm;
    g.spacing_nm = profile.fin_pitch_nm - profile.fin_width_nm;
    g.gapfill_space_nm = g.spacing_nm - 2.0 * profile.epi_nm;
    g.height_limit_nm =
        fin_height_limit(g.fin_width_nm, g.spacing_nm, profile.stability_coeff_per_nm2);
    const double effective = g.height_limit_nm - profile.sti_depth_nm;
    if (effective > 0.0) g.effective_height_nm = effective;
    return g;
}

}  // namespace fintool
